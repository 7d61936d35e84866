#pragma once

// Synthetic memoryless-source benchmark.
//
// Each trial draws a categorical distribution over a sub-alphabet of size a
// from the uniform (concentration 1) Dirichlet, samples an i.i.d. sequence
// from it, and scores the sequence under five coding distributions:
//
//   ORACLE  the true distribution
//   SDC_A   add-half estimator over the sub-alphabet
//   SDC_X   add-half estimator over the full alphabet of size x
//   SSD     sparse estimator over x
//   SSA     sub-alphabet mixture over x
//
// Sub-alphabet symbols are embedded as indices 0..a-1 of the full alphabet.
// Scores are ideal code lengths, -log2 p, unless coded scoring is requested.
//
// Every trial owns an std::mt19937_64 seeded through std::seed_seq from
// (seed, trial), so results do not depend on thread count or trial order.

#include "sparsedc/common.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sparsedc::bench {

enum class Method { Oracle = 0, SdcA, SdcX, Ssd, Ssa };
inline constexpr std::size_t kMethodCount = 5;
inline constexpr std::array<Method, kMethodCount> kAllMethods = {Method::Oracle, Method::SdcA, Method::SdcX,
                                                                 Method::Ssd, Method::Ssa};

std::string_view label(Method method);
std::optional<Method> parse_method(std::string_view name);

enum class Scoring {
    Ideal,  // -log2 p(x_{1:n})
    Coded,  // bits of range coder payload
};

struct ExperimentConfig {
    std::uint32_t sub_alphabet = 5;
    std::uint32_t full_alphabet = 26;
    std::uint64_t trials = 100000;
    std::uint32_t seq_len = 100;
    std::uint64_t seed = 1;
    std::vector<Method> methods{kAllMethods.begin(), kAllMethods.end()};
    Scoring scoring = Scoring::Ideal;
    unsigned threads = 0;  // 0: one per hardware thread

    // throws ParameterError
    void validate() const;
    bool enabled(Method method) const;
};

struct SummaryRow {
    std::string label;
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;

    bool operator==(const SummaryRow&) const = default;
};

// Bits per method for one trial, indexed by Method; NaN when disabled.
using TrialScores = std::array<double, kMethodCount>;

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

// uniform double in [0, 1) from the top 53 bits of one draw
double uniform01(std::mt19937_64& rng);

// A draw from Dirichlet(1, ..., 1) over k components, as normalized
// standard exponentials.
std::vector<double> sample_simplex(std::uint32_t k, std::mt19937_64& rng);

// n i.i.d. draws from theta by inverse CDF. Zero-probability symbols are
// never produced.
std::vector<Symbol> generate_sequence(std::span<const double> theta, std::uint64_t n, std::mt19937_64& rng);

// Expected entropy of n symbols from a Dirichlet(1) categorical over k
// symbols: n (H_k - 1) / ln 2 bits.
double expected_oracle_bits(std::uint32_t k, std::uint64_t n);

TrialScores score_trial(const ExperimentConfig& config, std::uint64_t trial);
std::vector<TrialScores> run_trials(const ExperimentConfig& config);

// One row per enabled method in Method order, then a DIFF row (SSD - SSA,
// per trial) when both are enabled.
std::vector<SummaryRow> summarize(const ExperimentConfig& config, std::span<const TrialScores> trials);
std::vector<SummaryRow> run_experiment(const ExperimentConfig& config);

// `method,mean,min,max` header then one line per row, 6 decimal places.
std::string emit_csv(std::span<const SummaryRow> rows);

// Fixed-width table for terminals.
std::string format_table(std::span<const SummaryRow> rows);

}  // namespace sparsedc::bench
