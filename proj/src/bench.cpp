#include "sparsedc/bench.hpp"

#include "sparsedc/codec.hpp"
#include "sparsedc/estimators.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>
#include <thread>

namespace sparsedc::bench {

std::string_view label(Method method) {
    switch (method) {
        case Method::Oracle: return "ORACLE";
        case Method::SdcA: return "SDC_A";
        case Method::SdcX: return "SDC_X";
        case Method::Ssd: return "SSD";
        case Method::Ssa: return "SSA";
    }
    return "?";
}

std::optional<Method> parse_method(std::string_view name) {
    for (Method m : kAllMethods) {
        std::string lower(label(m));
        std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
        if (name == label(m) || name == lower) return m;
    }
    return std::nullopt;
}

void ExperimentConfig::validate() const {
    if (sub_alphabet < 1) throw ParameterError("sub-alphabet size must be >= 1");
    if (full_alphabet < sub_alphabet) throw ParameterError("full alphabet must be at least the sub-alphabet");
    if (trials < 1) throw ParameterError("trials must be >= 1");
    if (seq_len < 1) throw ParameterError("sequence length must be >= 1");
    if (methods.empty()) throw ParameterError("at least one method is required");
    if (scoring == Scoring::Coded && full_alphabet > kCdfTotal - 1) {
        throw ParameterError("coded scoring supports alphabets below 2^16");
    }
}

bool ExperimentConfig::enabled(Method method) const {
    return std::find(methods.begin(), methods.end(), method) != methods.end();
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<double> sample_simplex(std::uint32_t k, std::mt19937_64& rng) {
    if (k < 1) throw ParameterError("simplex dimension must be >= 1");
    std::vector<double> theta(k);
    double sum = 0.0;
    for (double& v : theta) {
        // 1 - u lies in (0, 1], so the log is finite
        v = -std::log(1.0 - uniform01(rng));
        sum += v;
    }
    if (sum == 0.0) {
        std::fill(theta.begin(), theta.end(), 1.0 / k);
        return theta;
    }
    for (double& v : theta) v /= sum;
    return theta;
}

std::vector<Symbol> generate_sequence(std::span<const double> theta, std::uint64_t n, std::mt19937_64& rng) {
    std::vector<double> cdf(theta.size());
    std::partial_sum(theta.begin(), theta.end(), cdf.begin());
    std::size_t last = theta.size();
    while (last > 0 && theta[last - 1] <= 0.0) --last;
    if (last == 0) throw ParameterError("distribution has no mass");

    std::vector<Symbol> seq(n);
    for (Symbol& s : seq) {
        const double u = uniform01(rng) * cdf[last - 1];
        auto it = std::upper_bound(cdf.begin(), cdf.begin() + static_cast<std::ptrdiff_t>(last), u);
        std::size_t idx = std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), last - 1);
        while (theta[idx] <= 0.0) ++idx;
        s = static_cast<Symbol>(idx);
    }
    return seq;
}

double expected_oracle_bits(std::uint32_t k, std::uint64_t n) {
    double harmonic_tail = 0.0;
    for (std::uint32_t j = 2; j <= k; ++j) harmonic_tail += 1.0 / j;
    return static_cast<double>(n) * harmonic_tail / std::numbers::ln2;
}

namespace {

template <SequentialModel M>
double score(const ExperimentConfig& config, M model, std::span<const Symbol> seq) {
    if (config.scoring == Scoring::Ideal) return -sequence_log2prob(model, seq);
    return 8.0 * static_cast<double>(encode_payload(model, seq).size());
}

// Neumaier compensated sum alongside min and max.
struct Aggregate {
    double sum = 0.0;
    double compensation = 0.0;
    double min = std::numeric_limits<double>::infinity();
    double max = -std::numeric_limits<double>::infinity();
    std::uint64_t count = 0;

    void add(double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            compensation += (sum - t) + v;
        } else {
            compensation += (v - t) + sum;
        }
        sum = t;
        min = std::min(min, v);
        max = std::max(max, v);
        ++count;
    }

    SummaryRow row(std::string_view name) const {
        return {std::string(name), (sum + compensation) / static_cast<double>(count), min, max};
    }
};

}  // namespace

TrialScores score_trial(const ExperimentConfig& config, std::uint64_t trial) {
    auto rng = trial_rng(config.seed, trial);
    const std::vector<double> theta = sample_simplex(config.sub_alphabet, rng);
    const std::vector<Symbol> seq = generate_sequence(theta, config.seq_len, rng);

    TrialScores out;
    out.fill(std::numeric_limits<double>::quiet_NaN());
    const std::uint32_t x = config.full_alphabet;
    for (Method m : config.methods) {
        double bits = 0.0;
        switch (m) {
            case Method::Oracle: bits = score(config, OracleModel(theta), seq); break;
            case Method::SdcA: bits = score(config, SdcModel(config.sub_alphabet), seq); break;
            case Method::SdcX: bits = score(config, SdcModel(x), seq); break;
            case Method::Ssd: bits = score(config, SsdModel(x), seq); break;
            case Method::Ssa: bits = score(config, SsaModel(x), seq); break;
        }
        out[static_cast<std::size_t>(m)] = bits;
    }
    return out;
}

std::vector<TrialScores> run_trials(const ExperimentConfig& config) {
    config.validate();
    std::vector<TrialScores> results(config.trials);
    unsigned workers = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, config.trials));

    auto work = [&](unsigned worker) {
        for (std::uint64_t t = worker; t < config.trials; t += workers) results[t] = score_trial(config, t);
    };
    if (workers == 1) {
        work(0);
        return results;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    pool.clear();
    return results;
}

std::vector<SummaryRow> summarize(const ExperimentConfig& config, std::span<const TrialScores> trials) {
    std::array<Aggregate, kMethodCount> per_method;
    Aggregate diff;
    const bool with_diff = config.enabled(Method::Ssd) && config.enabled(Method::Ssa);
    for (const TrialScores& t : trials) {
        for (Method m : kAllMethods) {
            if (config.enabled(m)) per_method[static_cast<std::size_t>(m)].add(t[static_cast<std::size_t>(m)]);
        }
        if (with_diff) {
            diff.add(t[static_cast<std::size_t>(Method::Ssd)] - t[static_cast<std::size_t>(Method::Ssa)]);
        }
    }

    std::vector<SummaryRow> rows;
    for (Method m : kAllMethods) {
        if (config.enabled(m)) rows.push_back(per_method[static_cast<std::size_t>(m)].row(label(m)));
    }
    if (with_diff) rows.push_back(diff.row("DIFF"));
    return rows;
}

std::vector<SummaryRow> run_experiment(const ExperimentConfig& config) {
    const auto trials = run_trials(config);
    return summarize(config, trials);
}

std::string emit_csv(std::span<const SummaryRow> rows) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6);
    out << "method,mean,min,max\n";
    for (const SummaryRow& r : rows) out << r.label << ',' << r.mean << ',' << r.min << ',' << r.max << '\n';
    return out.str();
}

std::string format_table(std::span<const SummaryRow> rows) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6);
    out << std::left << std::setw(8) << "method" << std::right << std::setw(14) << "mean" << std::setw(14) << "min"
        << std::setw(14) << "max" << '\n';
    for (const SummaryRow& r : rows) {
        out << std::left << std::setw(8) << r.label << std::right << std::setw(14) << r.mean << std::setw(14)
            << r.min << std::setw(14) << r.max << '\n';
    }
    return out.str();
}

}  // namespace sparsedc::bench
