#pragma once

// Parity of the shifted Catalan Hankel determinant
//     H_{n,m} = det(C_{i+j+m}) = prod_{1<=i<=j<=m-1} (2n+i+j)/(i+j)
// computed from 2-adic valuations only.

#include <cstdint>
#include <stdexcept>

#include "bigint.hpp"

namespace catmod2 {

/// 1 iff H_{n,m} is odd.
inline int catalan_shift_parity(std::uint64_t n, std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("catalan_shift_parity: m must be >= 1");
    // The product is an integer, so the valuation sum is >= 0.
    std::int64_t v = 0;
    for (std::uint64_t i = 1; i < m; ++i)
        for (std::uint64_t j = i; j < m; ++j)
            v += static_cast<std::int64_t>(bits::valuation(2 * n + i + j)) -
                 static_cast<std::int64_t>(bits::valuation(i + j));
    return v == 0 ? 1 : 0;
}

/// 2^{K+1} with 2^K < m <= 2^{K+1} (1 for m = 1).
inline std::uint64_t parity_modulus(std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("parity_modulus: m must be >= 1");
    return std::uint64_t{1} << bits::ceil_log2(m);
}

/// n = 0 or -m modulo 2^{K+1}.
inline bool parity_residue_rule(std::uint64_t n, std::uint64_t m) {
    const std::uint64_t M = parity_modulus(m);
    const std::uint64_t r = n % M;
    return r == 0 || (r + m) % M == 0;
}

}  // namespace catmod2
