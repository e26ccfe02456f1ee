#pragma once

// Monic orthogonal polynomials p_n = x p_{n-1} - T_{n-2} p_{n-2} for the
// moment functional L(x^k) = A_k = a_{k+1}.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "bigint.hpp"
#include "seq.hpp"
#include "signs.hpp"
#include "unipoly.hpp"

namespace catmod2 {

inline UniPoly orthopoly(std::size_t n, std::span<const BigInt> T) {
    if (n >= 2 && T.size() < n - 1) throw std::invalid_argument("orthopoly: need n - 1 recurrence coefficients");
    UniPoly prev{1};
    if (n == 0) return prev;
    UniPoly cur = UniPoly::x();
    for (std::size_t k = 2; k <= n; ++k) {
        UniPoly next = UniPoly::x() * cur;
        next -= T[k - 2] * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// p_n with T taken from the 0/1 sequence.
inline UniPoly orthopoly_unit(std::size_t n) {
    std::vector<BigInt> T;
    for (std::uint64_t k = 0; k + 1 < n; ++k) T.emplace_back(T_int(k).value());
    return orthopoly(n, T);
}

inline constexpr std::size_t kOrthogonalityMaxIndex = 20;

/// L(p_i p_j).
inline BigInt moment_orthogonality(std::size_t i, std::size_t j) {
    if (i > kOrthogonalityMaxIndex || j > kOrthogonalityMaxIndex)
        throw std::invalid_argument("moment_orthogonality: indices must be <= 20");
    const UniPoly prod = orthopoly_unit(i) * orthopoly_unit(j);
    BigInt acc = 0;
    for (std::size_t k = 0; k < prod.coeffs().size(); ++k)
        if (seq::bit_a<std::uint64_t>(k + 1)) acc += prod.coeff(k);
    return acc;
}

}  // namespace catmod2
