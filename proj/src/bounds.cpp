#include "sparsedc/bounds.hpp"

#include "sparsedc/common.hpp"

#include <algorithm>
#include <cmath>

namespace sparsedc {

std::string_view to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::SdcFull: return "SDC_FULL";
        case BoundKind::SdcKnown: return "SDC_KNOWN";
        case BoundKind::Ssa: return "SSA";
        case BoundKind::Ssd: return "SSD";
    }
    return "?";
}

double log2_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) throw ParameterError("log2_binomial: k > n");
    const std::uint64_t terms = std::min(k, n - k);
    double acc = 0.0;
    for (std::uint64_t i = 1; i <= terms; ++i) {
        acc += std::log2(static_cast<double>(n - terms + i) / static_cast<double>(i));
    }
    return acc;
}

double redundancy_bound(BoundKind kind, std::uint64_t n, std::uint64_t a, std::uint64_t x) {
    if (n < 1) throw ParameterError("redundancy_bound: n must be >= 1");
    const double log2_n = std::log2(static_cast<double>(n));
    switch (kind) {
        case BoundKind::SdcFull: {
            if (x < 1) throw ParameterError("redundancy_bound: x must be >= 1");
            const double xd = static_cast<double>(x);
            return (xd - 1.0) / 2.0 * log2_n + xd - 1.0;
        }
        case BoundKind::SdcKnown: {
            if (a < 1) throw ParameterError("redundancy_bound: a must be >= 1");
            const double ad = static_cast<double>(a);
            return (ad - 1.0) / 2.0 * log2_n + ad - 1.0;
        }
        case BoundKind::Ssa:
        case BoundKind::Ssd: break;
    }
    if (a < 1 || a > x) throw ParameterError("redundancy_bound: requires 1 <= a <= x");
    const double ad = static_cast<double>(a);
    const double log2_x = std::log2(static_cast<double>(x));
    if (kind == BoundKind::Ssa) return log2_x + log2_binomial(x, a) + (ad - 1.0) / 2.0 * log2_n + ad + 1.0;
    return (ad + 1.0) / 2.0 * log2_n + ad * log2_x + ad + 1.0;
}

}  // namespace sparsedc
