#include "cli.hpp"

#include "sparsedc/bench.hpp"
#include "sparsedc/bounds.hpp"
#include "sparsedc/codec.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace sparsedc::cli {

namespace {

constexpr int kRuntimeFailure = 1;
constexpr int kUsageFailure = 2;

class UsageError : public Error {
public:
    using Error::Error;
};

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path + " for reading");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw Error("read failed on " + path);
    return bytes;
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("write failed on " + path);
}

struct CompressArgs {
    std::string model = "ssd";
    std::uint32_t alphabet = 256;
    std::string input;
    std::string output;
};

void compress(const CompressArgs& args, std::ostream& out) {
    const auto kind = parse_model_kind(args.model);
    if (!kind) throw UsageError("unknown model '" + args.model + "' (expected sdc, ssd or ssa)");
    if (args.alphabet < 2 || args.alphabet > 256) throw UsageError("--alphabet must be in [2, 256]");

    const std::vector<std::uint8_t> bytes = read_file(args.input);
    const std::vector<Symbol> symbols(bytes.begin(), bytes.end());
    const CompressedContainer container = encode_sequence(*kind, args.alphabet, symbols);
    const std::vector<std::uint8_t> encoded = container.serialize();
    write_file(args.output, encoded);

    const double ideal = ideal_code_length(Model(*kind, args.alphabet), symbols);
    out << std::fixed << std::setprecision(6);
    out << "original_bytes " << bytes.size() << '\n';
    out << "compressed_bytes " << encoded.size() << '\n';
    out << "payload_bytes " << container.payload.size() << '\n';
    out << "ideal_bits " << ideal << '\n';
}

struct DecompressArgs {
    std::string input;
    std::string output;
};

void decompress(const DecompressArgs& args, std::ostream& out) {
    const CompressedContainer container = CompressedContainer::parse(read_file(args.input));
    if (container.alphabet_size > 256) throw FormatError("byte streams need an alphabet of at most 256");
    const std::vector<Symbol> symbols = decode_sequence(container);
    const std::vector<std::uint8_t> bytes(symbols.begin(), symbols.end());
    write_file(args.output, bytes);
    out << "decompressed_bytes " << bytes.size() << '\n';
}

struct BenchArgs {
    bench::ExperimentConfig config;
    std::string csv;
    std::string methods;
    bool coded = false;
};

void run_bench(BenchArgs args, std::ostream& out) {
    if (!args.methods.empty()) {
        args.config.methods.clear();
        std::istringstream list(args.methods);
        for (std::string name; std::getline(list, name, ',');) {
            const auto m = bench::parse_method(name);
            if (!m) throw UsageError("unknown method '" + name + "'");
            args.config.methods.push_back(*m);
        }
    }
    if (args.coded) args.config.scoring = bench::Scoring::Coded;
    try {
        args.config.validate();
    } catch (const ParameterError& e) {
        throw UsageError(e.what());
    }

    const auto rows = bench::run_experiment(args.config);
    out << "a=" << args.config.sub_alphabet << " x=" << args.config.full_alphabet
        << " trials=" << args.config.trials << " len=" << args.config.seq_len << " seed=" << args.config.seed
        << " scoring=" << (args.config.scoring == bench::Scoring::Ideal ? "ideal" : "coded") << '\n';
    out << bench::format_table(rows);
    if (!args.csv.empty()) {
        const std::string csv = bench::emit_csv(rows);
        write_file(args.csv, std::span(reinterpret_cast<const std::uint8_t*>(csv.data()), csv.size()));
    }
}

struct BoundsArgs {
    std::uint64_t n = 0;
    std::uint64_t a = 0;  // 0: same as x
    std::uint64_t x = 0;
};

void print_bounds(const BoundsArgs& args, std::ostream& out) {
    const std::uint64_t a = args.a == 0 ? args.x : args.a;
    if (args.n < 1) throw UsageError("--n must be >= 1");
    if (args.x < 1 || a < 1 || a > args.x) throw UsageError("bounds require 1 <= a <= x");
    out << std::fixed << std::setprecision(6);
    for (BoundKind kind : {BoundKind::SdcFull, BoundKind::SdcKnown, BoundKind::Ssa, BoundKind::Ssd}) {
        out << to_string(kind) << ' ' << redundancy_bound(kind, args.n, a, args.x) << '\n';
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sparse sequential Dirichlet coding: compression, benchmarks and redundancy bounds", "sparsedc"};
    app.require_subcommand(1);

    CompressArgs compress_args;
    auto* compress_cmd = app.add_subcommand("compress", "compress a byte file");
    compress_cmd->add_option("--model", compress_args.model, "estimator: sdc, ssd or ssa")->capture_default_str();
    compress_cmd->add_option("--alphabet", compress_args.alphabet, "alphabet size in [2, 256]")
        ->capture_default_str();
    compress_cmd->add_option("input", compress_args.input, "file to compress")->required();
    compress_cmd->add_option("output", compress_args.output, "container to write")->required();

    DecompressArgs decompress_args;
    auto* decompress_cmd = app.add_subcommand("decompress", "restore a file from its container");
    decompress_cmd->add_option("input", decompress_args.input, "container to read")->required();
    decompress_cmd->add_option("output", decompress_args.output, "file to write")->required();

    BenchArgs bench_args;
    auto& cfg = bench_args.config;
    auto* bench_cmd = app.add_subcommand("bench", "score estimators on synthetic memoryless sources");
    bench_cmd->add_option("--a", cfg.sub_alphabet, "occurring sub-alphabet size")->required();
    bench_cmd->add_option("--x", cfg.full_alphabet, "full alphabet size")->required();
    bench_cmd->add_option("--trials", cfg.trials, "number of sampled sources")->capture_default_str();
    bench_cmd->add_option("--len", cfg.seq_len, "symbols per sequence")->capture_default_str();
    bench_cmd->add_option("--seed", cfg.seed, "base seed")->capture_default_str();
    bench_cmd->add_option("--threads", cfg.threads, "worker threads, 0 for all cores")->capture_default_str();
    bench_cmd->add_option("--methods", bench_args.methods, "comma-separated subset of oracle,sdc_a,sdc_x,ssd,ssa");
    bench_cmd->add_flag("--coded", bench_args.coded, "score range coder payload bits instead of -log2 p");
    bench_cmd->add_option("--csv", bench_args.csv, "also write the summary as CSV");

    BoundsArgs bounds_args;
    auto* bounds_cmd = app.add_subcommand("bounds", "print redundancy bounds in bits");
    bounds_cmd->add_option("--n", bounds_args.n, "sequence length")->required();
    bounds_cmd->add_option("--a", bounds_args.a, "occurring sub-alphabet size (default: x)");
    bounds_cmd->add_option("--x", bounds_args.x, "full alphabet size")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*compress_cmd) compress(compress_args, out);
        if (*decompress_cmd) decompress(decompress_args, out);
        if (*bench_cmd) run_bench(bench_args, out);
        if (*bounds_cmd) print_bounds(bounds_args, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kRuntimeFailure;
    }
    return 0;
}

}  // namespace sparsedc::cli
