#pragma once

#include <cstdint>
#include <string_view>

namespace sparsedc {

// Worst-case coding redundancy guarantees, in bits.
enum class BoundKind {
    SdcFull,   // add-half estimator over the full alphabet X
    SdcKnown,  // add-half estimator over the occurring sub-alphabet A
    Ssa,       // sub-alphabet mixture over X
    Ssd,       // sparse estimator over X, including the arithmetic coder's 2 bits
};

std::string_view to_string(BoundKind kind);

// log2 C(n, k), summed as min(k, n-k) log-ratios. Exact at k = 0, 1, n-1, n.
double log2_binomial(std::uint64_t n, std::uint64_t k);

// Redundancy bound for a sequence of length n drawn from a sub-alphabet of
// size a inside an alphabet of size x. `a` is ignored for SdcFull and `x`
// for SdcKnown. Throws ParameterError unless n >= 1 and 1 <= a <= x.
//
//   SdcFull:  (x-1)/2 log2 n + x - 1
//   SdcKnown: (a-1)/2 log2 n + a - 1
//   Ssa:      log2 x + log2 C(x,a) + (a-1)/2 log2 n + a + 1
//   Ssd:      (a+1)/2 log2 n + a log2 x + a + 1
double redundancy_bound(BoundKind kind, std::uint64_t n, std::uint64_t a, std::uint64_t x);

}  // namespace sparsedc
