#include "sparsedc/range_coder.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

namespace sparsedc {

namespace {

constexpr std::uint64_t kRenormThreshold = std::uint64_t{1} << 56;

}  // namespace

QuantizedCdf::QuantizedCdf(std::vector<std::uint32_t> cumulative) : cumulative_(std::move(cumulative)) {
    if (cumulative_.size() < 2 || cumulative_.front() != 0 || cumulative_.back() != kCdfTotal) {
        throw ParameterError("cumulative frequencies must run from 0 to 2^16");
    }
    for (std::size_t i = 1; i < cumulative_.size(); ++i) {
        if (cumulative_[i] <= cumulative_[i - 1]) throw ParameterError("every frequency must be >= 1");
    }
}

Symbol QuantizedCdf::find(std::uint32_t target) const {
    auto it = std::upper_bound(cumulative_.begin() + 1, cumulative_.end(), target);
    return static_cast<Symbol>(it - cumulative_.begin() - 1);
}

QuantizedCdf quantize(std::span<const double> log2probs) {
    const std::size_t size = log2probs.size();
    if (size == 0) throw ParameterError("quantize: empty distribution");
    if (size > kCdfTotal - 1) throw ParameterError("quantize: alphabet too large for 16-bit frequencies");

    const double peak = *std::max_element(log2probs.begin(), log2probs.end());
    if (!(peak > kNegInf)) throw ParameterError("quantize: distribution has no mass");

    std::vector<double> share(size);
    double sum = 0.0;
    for (std::size_t s = 0; s < size; ++s) {
        share[s] = std::exp2(log2probs[s] - peak);
        sum += share[s];
    }

    const double budget = static_cast<double>(kCdfTotal - size);
    std::vector<std::uint32_t> freq(size);
    std::vector<double> remainder(size);
    std::int64_t assigned = 0;
    for (std::size_t s = 0; s < size; ++s) {
        const double scaled = share[s] / sum * budget;
        const double whole = std::floor(scaled);
        freq[s] = 1 + static_cast<std::uint32_t>(whole);
        // snapped to a 2^-24 grid so that rounding noise cannot break index ties
        remainder[s] = std::round((scaled - whole) * 0x1p24) * 0x1p-24;
        assigned += freq[s];
    }

    std::vector<std::uint32_t> order(size);
    std::iota(order.begin(), order.end(), 0u);
    // largest remainder first, lowest index on ties
    auto before = [&](std::uint32_t a, std::uint32_t b) {
        return remainder[a] != remainder[b] ? remainder[a] > remainder[b] : a < b;
    };

    std::int64_t leftover = static_cast<std::int64_t>(kCdfTotal) - assigned;
    if (leftover >= 0 && static_cast<std::size_t>(leftover) < size) {
        // only the set of the first `leftover` symbols matters, not their order
        std::nth_element(order.begin(), order.begin() + leftover, order.end(), before);
    } else {
        std::sort(order.begin(), order.end(), before);
    }
    // floating-point slack can leave the floors one unit off in either direction
    for (std::size_t k = 0; leftover > 0; k = (k + 1) % size, --leftover) ++freq[order[k]];
    for (std::size_t k = size; leftover < 0;) {
        k = (k == 0 ? size : k) - 1;
        if (freq[order[k]] > 1) {
            --freq[order[k]];
            ++leftover;
        }
    }

    std::vector<std::uint32_t> cumulative(size + 1, 0);
    std::partial_sum(freq.begin(), freq.end(), cumulative.begin() + 1);
    return QuantizedCdf(std::move(cumulative));
}

// ---------------------------------------------------------------------------

void RangeEncoder::encode(std::uint32_t cum_low, std::uint32_t freq) {
    assert(freq > 0 && cum_low + freq <= kCdfTotal);
    const std::uint64_t r = range_ >> kCdfBits;
    const std::uint64_t offset = r * cum_low;
    low_ += offset;
    if (low_ < offset) propagate_carry();
    range_ = r * freq;
    while (range_ < kRenormThreshold) {
        out_.push_back(static_cast<std::uint8_t>(low_ >> 56));
        low_ <<= 8;
        range_ <<= 8;
    }
}

void RangeEncoder::propagate_carry() {
    for (auto it = out_.rbegin(); it != out_.rend(); ++it) {
        if (++*it != 0) return;
    }
    // the coded value is always below 1.0, so a carry never leaves the stream
    assert(false && "carry out of range coder stream");
}

std::vector<std::uint8_t> RangeEncoder::finish() && {
    for (int shift = 56; shift >= 0; shift -= 8) out_.push_back(static_cast<std::uint8_t>(low_ >> shift));
    return std::move(out_);
}

// ---------------------------------------------------------------------------

RangeDecoder::RangeDecoder(std::span<const std::uint8_t> in) : in_(in) {
    if (in_.size() < 8) throw TruncatedError("range coder stream shorter than its 8-byte termination");
    for (int i = 0; i < 8; ++i) value_ = (value_ << 8) | next_byte();
}

std::uint8_t RangeDecoder::next_byte() {
    if (pos_ >= in_.size()) throw TruncatedError("range coder stream ended early");
    return in_[pos_++];
}

std::uint32_t RangeDecoder::target() {
    const std::uint64_t r = range_ >> kCdfBits;
    const std::uint64_t slot = value_ / r;
    if (slot >= kCdfTotal) throw FormatError("corrupt range coder stream");
    return static_cast<std::uint32_t>(slot);
}

void RangeDecoder::consume(std::uint32_t cum_low, std::uint32_t freq) {
    const std::uint64_t r = range_ >> kCdfBits;
    value_ -= r * cum_low;
    range_ = r * freq;
    while (range_ < kRenormThreshold) {
        value_ = (value_ << 8) | next_byte();
        range_ <<= 8;
    }
}

}  // namespace sparsedc
