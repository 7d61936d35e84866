#pragma once

// Multi-symbol range coder over 64-bit registers.
//
// The encoder keeps the current interval as [low, low + range) inside a
// 64-bit window. Symbol probabilities arrive as integer frequencies out of
// a fixed total of 2^16. Whenever the top byte of the range is zero, the
// top byte of low is shifted out; a carry out of low is propagated back
// into the bytes already written. After renormalization range >= 2^56, so
// range / 2^16 >= 2^40 and no in-alphabet symbol can collapse the interval.
//
// Termination writes the 8 bytes of low. The decoder therefore consumes
// exactly as many bytes as the encoder produced, which lets it report a
// truncated stream instead of silently decoding padding.

#include "sparsedc/common.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace sparsedc {

inline constexpr std::uint32_t kCdfBits = 16;
inline constexpr std::uint32_t kCdfTotal = 1u << kCdfBits;

// Integer cumulative frequencies over X symbols with total kCdfTotal.
// Every symbol has frequency >= 1.
class QuantizedCdf {
public:
    QuantizedCdf() = default;
    explicit QuantizedCdf(std::vector<std::uint32_t> cumulative);

    std::uint32_t alphabet_size() const { return static_cast<std::uint32_t>(cumulative_.size() - 1); }
    std::uint32_t low(Symbol s) const { return cumulative_[s]; }
    std::uint32_t freq(Symbol s) const { return cumulative_[s + 1] - cumulative_[s]; }
    std::span<const std::uint32_t> cumulative() const { return cumulative_; }

    // the symbol whose interval [low, low + freq) contains target
    Symbol find(std::uint32_t target) const;

private:
    std::vector<std::uint32_t> cumulative_;
};

// Turns a next-symbol distribution (log2 probabilities, -inf allowed for
// zero mass) into a QuantizedCdf. The distribution is renormalized first,
// so deficient inputs are accepted. Each symbol gets 1 plus the floor of
// its share of the remaining 2^16 - X; leftover units go to the largest
// fractional parts, ties to the lowest index.
//
// Throws ParameterError when X > 2^16 - 1 or all mass is zero.
QuantizedCdf quantize(std::span<const double> log2probs);

class RangeEncoder {
public:
    void encode(std::uint32_t cum_low, std::uint32_t freq);
    void encode(const QuantizedCdf& cdf, Symbol s) { encode(cdf.low(s), cdf.freq(s)); }

    // bytes written so far, not counting the termination
    std::size_t size() const { return out_.size(); }

    // writes the termination bytes and hands over the stream
    std::vector<std::uint8_t> finish() &&;

private:
    void propagate_carry();

    std::uint64_t low_ = 0;
    std::uint64_t range_ = ~std::uint64_t{0};
    std::vector<std::uint8_t> out_;
};

class RangeDecoder {
public:
    // throws TruncatedError if fewer than 8 bytes are available
    explicit RangeDecoder(std::span<const std::uint8_t> in);

    // the cumulative-frequency slot the next symbol falls in; throws
    // FormatError on a value no encoder could have produced
    std::uint32_t target();

    // removes the symbol [cum_low, cum_low + freq) chosen from target()
    void consume(std::uint32_t cum_low, std::uint32_t freq);

    Symbol decode(const QuantizedCdf& cdf) {
        const Symbol s = cdf.find(target());
        consume(cdf.low(s), cdf.freq(s));
        return s;
    }

    // true once every input byte has been read
    bool exhausted() const { return pos_ == in_.size(); }

private:
    std::uint8_t next_byte();

    std::span<const std::uint8_t> in_;
    std::size_t pos_ = 0;
    std::uint64_t value_ = 0;  // code - low, mod 2^64
    std::uint64_t range_ = ~std::uint64_t{0};
};

}  // namespace sparsedc
