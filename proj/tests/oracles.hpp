#pragma once

// Reference computations used only by the tests. Each one evaluates a
// defining product or sum directly from the raw sequence, sharing no code
// with the incremental estimators it is checked against.

#include "sparsedc/common.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace sparsedc::testing {

// number of times seq[i] occurs in seq[0..i)
inline std::uint64_t prior_count(const std::vector<Symbol>& seq, std::size_t i) {
    std::uint64_t c = 0;
    for (std::size_t j = 0; j < i; ++j) c += seq[j] == seq[i];
    return c;
}

inline std::size_t prior_distinct(const std::vector<Symbol>& seq, std::size_t i) {
    return std::set<Symbol>(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(i)).size();
}

// Add-half estimator over an alphabet of m symbols:
// prod_i (c(x_{1:i}) + 1/2) / (i + m/2 - 1), in long double.
inline long double kt_prob(const std::vector<Symbol>& seq, std::uint64_t m) {
    long double p = 1.0L;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        p *= (prior_count(seq, i) + 0.5L) / ((i + 1) + m / 2.0L - 1.0L);
    }
    return p;
}

// Sparse estimator, straight from the per-step definition.
inline long double ssd_prob(const std::vector<Symbol>& seq, std::uint64_t x) {
    long double p = 1.0L;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const long double step = i + 1;
        const long double alpha = 1.0L / step;
        const std::uint64_t c = prior_count(seq, i);
        const std::size_t u = prior_distinct(seq, i);
        if (c == 0) {
            p *= alpha / static_cast<long double>(x - u);
        } else {
            p *= (1.0L - alpha) * (c + 0.5L) / (step + u / 2.0L - 1.0L);
        }
    }
    return p;
}

inline long double binomial(std::uint64_t n, std::uint64_t k) {
    long double r = 1.0L;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Sub-alphabet mixture by enumerating every non-empty subset S of [0, x)
// with weight 1/(x C(x,|S|)); subsets missing an observed symbol give 0.
inline long double ssa_prob_brute_force(const std::vector<Symbol>& seq, std::uint32_t x) {
    std::uint64_t used = 0;
    for (Symbol s : seq) used |= std::uint64_t{1} << s;
    long double total = 0.0L;
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << x); ++subset) {
        if ((subset & used) != used) continue;
        const auto size = static_cast<std::uint64_t>(__builtin_popcountll(subset));
        total += kt_prob(seq, size) / (x * binomial(x, size));
    }
    return total;
}

// log2 of the maximum-likelihood i.i.d. probability of seq.
inline double ml_log2prob(const std::vector<Symbol>& seq) {
    std::map<Symbol, std::uint64_t> counts;
    for (Symbol s : seq) ++counts[s];
    double total = 0.0;
    const double n = static_cast<double>(seq.size());
    for (const auto& [s, c] : counts) total += static_cast<double>(c) * std::log2(static_cast<double>(c) / n);
    return total;
}

// Calls f on every sequence in [0, x)^n.
inline void for_each_sequence(std::uint32_t x, std::size_t n, const std::function<void(const std::vector<Symbol>&)>& f) {
    std::vector<Symbol> seq(n, 0);
    while (true) {
        f(seq);
        std::size_t i = 0;
        while (i < n && ++seq[i] == x) seq[i++] = 0;
        if (i == n) return;
    }
}

inline std::vector<Symbol> random_sequence(std::mt19937_64& rng, std::uint32_t x, std::size_t n) {
    std::uniform_int_distribution<Symbol> pick(0, x - 1);
    std::vector<Symbol> seq(n);
    for (Symbol& s : seq) s = pick(rng);
    return seq;
}

}  // namespace sparsedc::testing
