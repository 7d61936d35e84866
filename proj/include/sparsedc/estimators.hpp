#pragma once

#include "sparsedc/common.hpp"
#include "sparsedc/count_table.hpp"

#include <concepts>
#include <cstdint>
#include <span>
#include <vector>

namespace sparsedc {

// A sequential probability assignment over a fixed alphabet [0, X).
//
// conditional() and distribution() are pure queries of the next-symbol
// distribution; update() folds one observed symbol into the state. The
// joint probability of a sequence is the product of the conditionals taken
// just before each update.
template <class M>
concept SequentialModel = requires(M& m, const M& cm, Symbol s, std::span<double> out) {
    { cm.alphabet_size() } -> std::convertible_to<std::uint32_t>;
    { cm.conditional(s) } -> std::convertible_to<Log2Prob>;
    cm.distribution(out);
    m.update(s);
};

// Throws InvalidSymbolError unless s < alphabet_size.
void check_symbol(Symbol s, std::uint32_t alphabet_size);

// log2((c_s + 1/2) / (n + m/2)): the add-half conditional over an alphabet
// of m symbols, with n and c_s read from the table.
Log2Prob kt_conditional(const CountTable& counts, std::uint64_t m, Symbol s);

// Sequential Dirichlet (Krichevsky-Trofimov) estimator over the full
// alphabet.
class SdcModel {
public:
    explicit SdcModel(std::uint32_t alphabet_size);

    std::uint32_t alphabet_size() const { return alphabet_size_; }
    const CountTable& counts() const { return counts_; }

    Log2Prob conditional(Symbol s) const;
    void distribution(std::span<double> out) const;
    void update(Symbol s);

    bool operator==(const SdcModel&) const = default;

private:
    std::uint32_t alphabet_size_;
    CountTable counts_;
};

// Sparse Sequential Dirichlet estimator.
//
// At step i (1-based index of the next symbol) with u distinct symbols
// seen so far, a new symbol receives alpha_i / (X - u) and a seen symbol s
// receives (1 - alpha_i)(c_s + 1/2) / (i + u/2 - 1), where alpha_i = 1/i.
// Once every symbol of the alphabet has been seen the escape mass alpha_i
// is left unassigned, so the conditional sums to 1 - 1/i.
//
// Each update is O(1) and the state holds counts only for seen symbols.
class SsdModel {
public:
    explicit SsdModel(std::uint32_t alphabet_size);

    std::uint32_t alphabet_size() const { return alphabet_size_; }
    const CountTable& counts() const { return counts_; }

    // index of the next symbol, n + 1
    std::uint64_t step() const { return counts_.total() + 1; }
    double escape_weight() const { return 1.0 / static_cast<double>(step()); }

    Log2Prob conditional(Symbol s) const;
    void distribution(std::span<double> out) const;
    void update(Symbol s);

    bool operator==(const SsdModel&) const = default;

private:
    std::uint32_t alphabet_size_;
    CountTable counts_;
};

// Sequential Sub-Alphabet estimator: a Bayesian mixture of add-half
// estimators, one per non-empty subset of the alphabet, with prior
// 1/(X * C(X, m)) on each subset of size m.
//
// The add-half probability of a sequence depends only on its counts and
// the subset size m, so the 2^X - 1 subsets collapse into X size buckets.
// Bucket m stores log2 KT_m(x_{1:n}) and is weighted by the number of
// size-m subsets that contain every observed symbol, C(X - u, m - u).
// Updates and queries cost O(X) time; the state is O(X).
class SsaModel {
public:
    explicit SsaModel(std::uint32_t alphabet_size);

    std::uint32_t alphabet_size() const { return alphabet_size_; }
    const CountTable& counts() const { return counts_; }

    // entry m-1 holds log2 KT_m(x_{1:n}) for sub-alphabet size m
    std::span<const double> block_log2prob() const { return block_; }
    // entry m-1 holds -log2 X - log2 C(X, m)
    std::span<const double> prior_log2weight() const { return prior_; }

    // log2 of the mixture probability of everything observed so far
    Log2Prob log2_block_probability() const;

    Log2Prob conditional(Symbol s) const;
    void distribution(std::span<double> out) const;
    void update(Symbol s);

    bool operator==(const SsaModel&) const = default;

private:
    double log2_binom(std::uint64_t n, std::uint64_t k) const {
        return log2_factorial_[n] - log2_factorial_[k] - log2_factorial_[n - k];
    }

    // log2 of the prior mass on size-m subsets containing the observed
    // symbols (and `extra` further fixed symbols), times KT_m
    double bucket_term(std::uint64_t m, std::uint64_t extra) const;

    std::uint32_t alphabet_size_;
    CountTable counts_;
    std::vector<double> block_;
    std::vector<double> prior_;
    std::vector<double> log2_factorial_;
};

// The true memoryless source: i.i.d. symbols with probabilities theta.
class OracleModel {
public:
    // theta must be non-empty, non-negative, and sum to 1 within 1e-12
    explicit OracleModel(std::vector<double> theta);

    std::uint32_t alphabet_size() const { return static_cast<std::uint32_t>(theta_.size()); }
    std::span<const double> theta() const { return theta_; }

    // throws ImpossibleEventError when theta_s = 0
    Log2Prob conditional(Symbol s) const;
    // zero-probability symbols are reported as -inf
    void distribution(std::span<double> out) const;
    void update(Symbol s) { check_symbol(s, alphabet_size()); }

    bool operator==(const OracleModel&) const = default;

private:
    std::vector<double> theta_;
};

// log2 of the joint probability of seq under the chain rule, starting from
// the given model state. An empty sequence gives 0.
template <SequentialModel M>
Log2Prob sequence_log2prob(M model, std::span<const Symbol> seq) {
    Log2Prob total = 0.0;
    for (Symbol s : seq) {
        total += model.conditional(s);
        model.update(s);
    }
    return total;
}

// sum_i log2 theta_{x_i}; throws ImpossibleEventError on a zero-probability
// symbol.
Log2Prob oracle_log2prob(const OracleModel& model, std::span<const Symbol> seq);

}  // namespace sparsedc
