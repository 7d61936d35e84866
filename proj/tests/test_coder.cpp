#include <doctest.h>

#include "oracles.hpp"
#include "sparsedc/codec.hpp"
#include "sparsedc/range_coder.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

using namespace sparsedc;
using doctest::Approx;

namespace {

std::vector<std::uint32_t> cdf_of(const std::vector<double>& probs) {
    std::vector<double> logs(probs.size());
    std::transform(probs.begin(), probs.end(), logs.begin(), [](double p) { return std::log2(p); });
    const QuantizedCdf cdf = quantize(logs);
    const auto c = cdf.cumulative();
    return {c.begin(), c.end()};
}

}  // namespace

TEST_CASE("quantize exact splits") {
    CHECK(cdf_of({0.5, 0.5}) == std::vector<std::uint32_t>{0, 32768, 65536});
    CHECK(cdf_of({0.75, 0.25}) == std::vector<std::uint32_t>{0, 49152, 65536});
    CHECK(cdf_of({1.0}) == std::vector<std::uint32_t>{0, 65536});
}

TEST_CASE("quantize gives zero-mass symbols the floor frequency") {
    CHECK(cdf_of({1.0, 0.0}) == std::vector<std::uint32_t>{0, 65535, 65536});
}

TEST_CASE("quantize renormalizes a deficient distribution") {
    SsdModel m(3);
    for (Symbol s : {0u, 1u, 2u, 0u}) m.update(s);
    std::vector<double> dist(3);
    m.distribution(dist);
    double mass = 0.0;
    for (double v : dist) mass += std::exp2(v);
    REQUIRE(mass == Approx(0.8));

    const QuantizedCdf cdf = quantize(dist);
    CHECK(cdf.cumulative().back() == kCdfTotal);
    for (Symbol s = 0; s < 3; ++s) {
        CHECK(cdf.freq(s) / double(kCdfTotal) == Approx(std::exp2(dist[s]) / mass).epsilon(1e-3));
    }
}

TEST_CASE("quantize properties") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 500; ++trial) {
        const auto x = std::uniform_int_distribution<std::uint32_t>(1, 300)(rng);
        std::vector<double> logs(x);
        for (double& v : logs) v = std::uniform_real_distribution<double>(-40.0, 0.0)(rng);
        if (x > 1 && trial % 3 == 0) logs[std::uniform_int_distribution<std::uint32_t>(0, x - 1)(rng)] = kNegInf;
        if (x > 1 && trial % 5 == 0) logs[x - 1] = logs[0];  // a tie for the maximum, possibly

        const QuantizedCdf cdf = quantize(logs);
        const auto cum = cdf.cumulative();
        REQUIRE(cum.size() == x + 1);
        CHECK(cum.front() == 0);
        CHECK(cum.back() == kCdfTotal);
        for (Symbol s = 0; s < x; ++s) CHECK(cdf.freq(s) >= 1);

        // the most probable symbol (lowest index on ties) gets the largest frequency
        const auto argmax = static_cast<Symbol>(std::max_element(logs.begin(), logs.end()) - logs.begin());
        for (Symbol s = 0; s < x; ++s) CHECK(cdf.freq(argmax) >= cdf.freq(s));
    }
}

TEST_CASE("quantize errors") {
    CHECK_THROWS_AS(quantize(std::vector<double>(kCdfTotal, -16.0)), ParameterError);
    CHECK_THROWS_AS(quantize(std::vector<double>{}), ParameterError);
    CHECK_THROWS_AS(quantize(std::vector<double>{kNegInf, kNegInf}), ParameterError);
}

TEST_CASE("QuantizedCdf::find") {
    const QuantizedCdf cdf({0, 10, 11, 65536});
    CHECK(cdf.find(0) == 0);
    CHECK(cdf.find(9) == 0);
    CHECK(cdf.find(10) == 1);
    CHECK(cdf.find(11) == 2);
    CHECK(cdf.find(65535) == 2);
    CHECK_THROWS_AS(QuantizedCdf({0, 10, 10, 65536}), ParameterError);
}

TEST_CASE("range coder carries propagate into written bytes") {
    // drive low toward the top of the window so that additions overflow
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> symbols;
        RangeEncoder enc;
        for (int i = 0; i < 400; ++i) {
            const bool high = std::uniform_int_distribution<int>(0, 9)(rng) != 0;
            const std::uint32_t freq = std::uniform_int_distribution<std::uint32_t>(1, 300)(rng);
            const std::uint32_t low = high ? kCdfTotal - freq : 0;
            symbols.emplace_back(low, freq);
            enc.encode(low, freq);
        }
        const auto bytes = std::move(enc).finish();
        RangeDecoder dec(bytes);
        for (const auto& [low, freq] : symbols) {
            const std::uint32_t t = dec.target();
            REQUIRE(t >= low);
            REQUIRE(t < low + freq);
            dec.consume(low, freq);
        }
        CHECK(dec.exhausted());
    }
}

TEST_CASE("encode/decode examples") {
    SUBCASE("certain event codes to the 8-byte termination only") {
        OracleModel enc_model({1.0, 0.0});
        const std::vector<Symbol> zeros(100, 0);
        const auto payload = encode_payload(enc_model, zeros);
        CHECK(payload.size() <= 8);
        OracleModel dec_model({1.0, 0.0});
        CHECK(decode_payload(dec_model, payload, zeros.size()) == zeros);
    }
    SUBCASE("fair coin") {
        OracleModel model({0.5, 0.5});
        const std::vector<Symbol> seq{0, 1, 1, 0, 1, 0, 0, 1};
        const auto payload = encode_payload(model, seq);
        CHECK(payload.size() * 8 <= 8 + 2 + 64);
        OracleModel dec_model({0.5, 0.5});
        CHECK(decode_payload(dec_model, payload, seq.size()) == seq);
    }
    SUBCASE("SSD over bytes") {
        std::mt19937_64 rng(2);
        const auto seq = testing::random_sequence(rng, 256, 1000);
        const auto container = encode_sequence(ModelKind::Ssd, 256, seq);
        CHECK(decode_sequence(CompressedContainer::parse(container.serialize())) == seq);
    }
    SUBCASE("empty sequence") {
        const auto container = encode_sequence(ModelKind::Ssa, 17, std::vector<Symbol>{});
        CHECK(container.length == 0);
        CHECK(decode_sequence(container).empty());
    }
}

TEST_CASE("decoder model ends in the encoder's state") {
    std::mt19937_64 rng(4);
    const auto seq = testing::random_sequence(rng, 6, 300);
    for (ModelKind kind : {ModelKind::Sdc, ModelKind::Ssd, ModelKind::Ssa}) {
        Model encoder_model(kind, 40);
        const auto payload = encode_payload(encoder_model, seq);
        CompressedContainer c{kind, 40, seq.size(), payload};
        Model decoder_model(kind, 40);
        CHECK(decode_sequence(c, decoder_model) == seq);
        CHECK(decoder_model == encoder_model);
    }
}

TEST_CASE("container layout") {
    const std::vector<Symbol> seq{1, 2, 3};
    const auto c = encode_sequence(ModelKind::Ssa, 300, seq);
    const auto bytes = c.serialize();
    REQUIRE(bytes.size() == CompressedContainer::kHeaderSize + c.payload.size());
    CHECK(std::vector<std::uint8_t>(bytes.begin(), bytes.begin() + 18) ==
          std::vector<std::uint8_t>{'S', 'S', 'D', 'C', 1, 2, 0x2c, 0x01, 0, 0, 3, 0, 0, 0, 0, 0, 0, 0});
    CHECK(CompressedContainer::parse(bytes) == c);
}

TEST_CASE("container errors") {
    const auto good = encode_sequence(ModelKind::Sdc, 4, std::vector<Symbol>{0, 1, 2, 3, 3, 3}).serialize();

    auto bad_magic = good;
    std::copy_n("XXXX", 4, bad_magic.begin());
    CHECK_THROWS_AS(CompressedContainer::parse(bad_magic), FormatError);

    auto bad_version = good;
    bad_version[4] = 2;
    CHECK_THROWS_AS(CompressedContainer::parse(bad_version), FormatError);

    auto bad_model = good;
    bad_model[5] = 3;
    CHECK_THROWS_AS(CompressedContainer::parse(bad_model), FormatError);

    CHECK_THROWS_AS(CompressedContainer::parse(std::span(good).first(10)), TruncatedError);

    const auto truncated = CompressedContainer::parse(std::span(good).first(good.size() - 1));
    CHECK_THROWS_AS(decode_sequence(truncated), TruncatedError);

    const auto c = CompressedContainer::parse(good);
    Model wrong_kind(ModelKind::Ssd, 4);
    CHECK_THROWS_AS(decode_sequence(c, wrong_kind), ModelMismatchError);
    Model wrong_size(ModelKind::Sdc, 5);
    CHECK_THROWS_AS(decode_sequence(c, wrong_size), ModelMismatchError);
    Model used(ModelKind::Sdc, 4);
    used.update(0);
    CHECK_THROWS_AS(decode_sequence(c, used), ModelMismatchError);
}

TEST_CASE("encoding rejects symbols outside the alphabet") {
    CHECK_THROWS_AS(encode_sequence(ModelKind::Ssd, 4, std::vector<Symbol>{0, 4}), InvalidSymbolError);
}

TEST_CASE("ideal_code_length") {
    CHECK(ideal_code_length(SdcModel(2), std::vector<Symbol>{0, 0}) == Approx(1.415037499278844).epsilon(1e-12));
    CHECK(ideal_code_length(OracleModel({1.0}), std::vector<Symbol>(10, 0)) == 0.0);
    CHECK(ideal_code_length(SsdModel(26), std::vector<Symbol>{0, 0}) == Approx(5.700439718141092).epsilon(1e-12));
}

TEST_CASE("payload length tracks the quantized code length") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const auto kind = static_cast<ModelKind>(trial % 3);
        const auto x = std::uniform_int_distribution<std::uint32_t>(2, 256)(rng);
        const auto used = std::uniform_int_distribution<std::uint32_t>(1, std::min(x, 12u))(rng);
        const auto seq = testing::random_sequence(rng, used, std::uniform_int_distribution<std::size_t>(0, 500)(rng));
        const auto c = encode_sequence(kind, x, seq);
        const double bits = 8.0 * static_cast<double>(c.payload.size());
        CHECK(bits < quantized_code_length(Model(kind, x), seq) + 2 + 64);
        CHECK(bits - ideal_code_length(Model(kind, x), seq) <= 0.01 * static_cast<double>(seq.size()) + 64);
    }
}
