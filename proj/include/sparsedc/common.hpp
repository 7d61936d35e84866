#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

namespace sparsedc {

// Symbols are dense indices into an alphabet [0, X).
using Symbol = std::uint32_t;

// Base-2 logarithm of a probability. Always <= 0, never NaN.
using Log2Prob = double;

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A symbol outside the alphabet of the model it was given to.
class InvalidSymbolError : public Error {
public:
    using Error::Error;
};

// An event the model assigns probability zero.
class ImpossibleEventError : public Error {
public:
    using Error::Error;
};

// A parameter outside its documented range.
class ParameterError : public Error {
public:
    using Error::Error;
};

// A compressed container that does not follow the documented layout.
class FormatError : public Error {
public:
    using Error::Error;
};

// A compressed stream that ends before the decoder is done with it.
class TruncatedError : public Error {
public:
    using Error::Error;
};

// A decoder model that does not match the container it is asked to decode.
class ModelMismatchError : public Error {
public:
    using Error::Error;
};

// log2(2^a + 2^b), stable for large magnitudes and -inf operands.
inline double log2_add(double a, double b) {
    if (a < b) std::swap(a, b);
    if (b == kNegInf) return a;
    return a + std::log2(1.0 + std::exp2(b - a));
}

// log2(sum_i 2^v_i) with max-subtraction. Empty input gives -inf.
inline double log2_sum(std::span<const double> values) {
    double peak = kNegInf;
    for (double v : values) peak = std::max(peak, v);
    if (peak == kNegInf) return kNegInf;
    double acc = 0.0;
    for (double v : values) acc += std::exp2(v - peak);
    return peak + std::log2(acc);
}

// Streaming log2-sum-exp2. Rescales the running sum whenever a larger term
// arrives, so each term costs one exp2.
class Log2Accumulator {
public:
    void add(double v) {
        if (v == kNegInf) return;
        if (v <= peak_) {
            acc_ += std::exp2(v - peak_);
        } else {
            acc_ = acc_ * std::exp2(peak_ - v) + 1.0;
            peak_ = v;
        }
    }

    double value() const { return peak_ == kNegInf ? kNegInf : peak_ + std::log2(acc_); }

private:
    double peak_ = kNegInf;
    double acc_ = 0.0;
};

}  // namespace sparsedc
