#include "sparsedc/estimators.hpp"

#include <numeric>
#include <string>

namespace sparsedc {

void check_symbol(Symbol s, std::uint32_t alphabet_size) {
    if (s >= alphabet_size) {
        throw InvalidSymbolError("symbol " + std::to_string(s) + " outside alphabet of size " +
                                 std::to_string(alphabet_size));
    }
}

namespace {

std::uint32_t checked_alphabet(std::uint32_t alphabet_size) {
    if (alphabet_size == 0) throw ParameterError("alphabet size must be positive");
    return alphabet_size;
}

void check_output(std::span<double> out, std::uint32_t alphabet_size) {
    if (out.size() != alphabet_size) throw ParameterError("distribution buffer size != alphabet size");
}

}  // namespace

Log2Prob kt_conditional(const CountTable& counts, std::uint64_t m, Symbol s) {
    const double c = static_cast<double>(counts.count(s));
    const double n = static_cast<double>(counts.total());
    return std::log2(c + 0.5) - std::log2(n + 0.5 * static_cast<double>(m));
}

// ---------------------------------------------------------------------------
// SdcModel

SdcModel::SdcModel(std::uint32_t alphabet_size) : alphabet_size_(checked_alphabet(alphabet_size)) {}

Log2Prob SdcModel::conditional(Symbol s) const {
    check_symbol(s, alphabet_size_);
    return kt_conditional(counts_, alphabet_size_, s);
}

void SdcModel::distribution(std::span<double> out) const {
    check_output(out, alphabet_size_);
    const double denom = std::log2(static_cast<double>(counts_.total()) + 0.5 * alphabet_size_);
    std::fill(out.begin(), out.end(), -1.0 - denom);
    for (const auto& [s, c] : counts_.entries()) out[s] = std::log2(static_cast<double>(c) + 0.5) - denom;
}

void SdcModel::update(Symbol s) {
    check_symbol(s, alphabet_size_);
    counts_.observe(s);
}

// ---------------------------------------------------------------------------
// SsdModel

SsdModel::SsdModel(std::uint32_t alphabet_size) : alphabet_size_(checked_alphabet(alphabet_size)) {}

Log2Prob SsdModel::conditional(Symbol s) const {
    check_symbol(s, alphabet_size_);
    const double i = static_cast<double>(step());
    const std::uint64_t u = counts_.distinct();
    const std::uint64_t c = counts_.count(s);
    if (c == 0) {
        if (u == alphabet_size_) {
            // pigeonhole: an unseen symbol cannot exist once all X are seen
            throw ImpossibleEventError("unseen symbol with a saturated alphabet");
        }
        return -std::log2(i) - std::log2(static_cast<double>(alphabet_size_ - u));
    }
    return std::log2(1.0 - 1.0 / i) + std::log2(static_cast<double>(c) + 0.5) -
           std::log2(i + 0.5 * static_cast<double>(u) - 1.0);
}

void SsdModel::distribution(std::span<double> out) const {
    check_output(out, alphabet_size_);
    const double i = static_cast<double>(step());
    const std::uint64_t u = counts_.distinct();
    const double unseen =
        u < alphabet_size_ ? -std::log2(i) - std::log2(static_cast<double>(alphabet_size_ - u)) : kNegInf;
    std::fill(out.begin(), out.end(), unseen);
    if (u == 0) return;
    const double seen_scale = std::log2(1.0 - 1.0 / i) - std::log2(i + 0.5 * static_cast<double>(u) - 1.0);
    for (const auto& [s, c] : counts_.entries()) out[s] = seen_scale + std::log2(static_cast<double>(c) + 0.5);
}

void SsdModel::update(Symbol s) {
    check_symbol(s, alphabet_size_);
    counts_.observe(s);
}

// ---------------------------------------------------------------------------
// SsaModel

SsaModel::SsaModel(std::uint32_t alphabet_size)
    : alphabet_size_(checked_alphabet(alphabet_size)),
      block_(alphabet_size, 0.0),
      prior_(alphabet_size),
      log2_factorial_(alphabet_size + 1, 0.0) {
    for (std::uint32_t k = 1; k <= alphabet_size_; ++k) {
        log2_factorial_[k] = log2_factorial_[k - 1] + std::log2(static_cast<double>(k));
    }
    const double log2_x = std::log2(static_cast<double>(alphabet_size_));
    for (std::uint32_t m = 1; m <= alphabet_size_; ++m) prior_[m - 1] = -log2_x - log2_binom(alphabet_size_, m);
}

double SsaModel::bucket_term(std::uint64_t m, std::uint64_t extra) const {
    const std::uint64_t fixed = counts_.distinct() + extra;
    return prior_[m - 1] + log2_binom(alphabet_size_ - fixed, m - fixed) + block_[m - 1];
}

Log2Prob SsaModel::log2_block_probability() const {
    Log2Accumulator acc;
    const std::uint64_t first = std::max<std::uint64_t>(counts_.distinct(), 1);
    for (std::uint64_t m = first; m <= alphabet_size_; ++m) acc.add(bucket_term(m, 0));
    return acc.value();
}

Log2Prob SsaModel::conditional(Symbol s) const {
    check_symbol(s, alphabet_size_);
    const std::uint64_t u = counts_.distinct();
    const double n = static_cast<double>(counts_.total());
    const std::uint64_t c = counts_.count(s);

    Log2Accumulator denom;
    Log2Accumulator numer;
    for (std::uint64_t m = std::max<std::uint64_t>(u, 1); m <= alphabet_size_; ++m) {
        const double term = bucket_term(m, 0);
        denom.add(term);
        if (c > 0) numer.add(term - std::log2(n + 0.5 * static_cast<double>(m)));
    }
    if (c > 0) return numer.value() + std::log2(static_cast<double>(c) + 0.5) - denom.value();

    for (std::uint64_t m = u + 1; m <= alphabet_size_; ++m) {
        numer.add(bucket_term(m, 1) - 1.0 - std::log2(n + 0.5 * static_cast<double>(m)));
    }
    return numer.value() - denom.value();
}

void SsaModel::distribution(std::span<double> out) const {
    check_output(out, alphabet_size_);
    const std::uint64_t u = counts_.distinct();
    const double n = static_cast<double>(counts_.total());

    Log2Accumulator denom;
    Log2Accumulator seen;
    Log2Accumulator unseen;
    for (std::uint64_t m = std::max<std::uint64_t>(u, 1); m <= alphabet_size_; ++m) {
        const double step = std::log2(n + 0.5 * static_cast<double>(m));
        const double term = bucket_term(m, 0);
        denom.add(term);
        seen.add(term - step);
        if (m > u) unseen.add(bucket_term(m, 1) - 1.0 - step);
    }
    const double d = denom.value();
    std::fill(out.begin(), out.end(), unseen.value() - d);
    const double seen_scale = seen.value() - d;
    for (const auto& [s, c] : counts_.entries()) out[s] = seen_scale + std::log2(static_cast<double>(c) + 0.5);
}

void SsaModel::update(Symbol s) {
    check_symbol(s, alphabet_size_);
    const double numer = std::log2(static_cast<double>(counts_.count(s)) + 0.5);
    const double n = static_cast<double>(counts_.total());
    for (std::uint32_t m = 1; m <= alphabet_size_; ++m) {
        block_[m - 1] += numer - std::log2(n + 0.5 * static_cast<double>(m));
    }
    counts_.observe(s);
}

// ---------------------------------------------------------------------------
// OracleModel

OracleModel::OracleModel(std::vector<double> theta) : theta_(std::move(theta)) {
    if (theta_.empty()) throw ParameterError("oracle distribution must be non-empty");
    for (double p : theta_) {
        if (!(p >= 0.0)) throw ParameterError("oracle probabilities must be non-negative");
    }
    const double sum = std::accumulate(theta_.begin(), theta_.end(), 0.0);
    if (std::abs(sum - 1.0) > 1e-12) throw ParameterError("oracle probabilities must sum to 1");
}

Log2Prob OracleModel::conditional(Symbol s) const {
    check_symbol(s, alphabet_size());
    if (theta_[s] == 0.0) {
        throw ImpossibleEventError("symbol " + std::to_string(s) + " has zero probability under the oracle");
    }
    return std::log2(theta_[s]);
}

void OracleModel::distribution(std::span<double> out) const {
    check_output(out, alphabet_size());
    for (std::size_t s = 0; s < theta_.size(); ++s) out[s] = theta_[s] > 0.0 ? std::log2(theta_[s]) : kNegInf;
}

Log2Prob oracle_log2prob(const OracleModel& model, std::span<const Symbol> seq) {
    return sequence_log2prob(model, seq);
}

}  // namespace sparsedc
