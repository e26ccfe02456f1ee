#pragma once

// Integer and sign sequences defined by binary digits. Digits are indexed
// least significant first: n = [e_k ... e_1 e_0]_2.

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "bigint.hpp"
#include "sign.hpp"

namespace catmod2::seq {

/// 1 iff n + 1 is a power of two (the Catalan numbers mod 2).
template <IndexType I>
int bit_a(const I& n) {
    return bits::is_pow2(I(n + 1)) ? 1 : 0;
}

/// Paperfolding sequence: S(0) = 1, S(2n) = (-1)^n, S(2n+1) = S(n).
template <IndexType I>
Sign paperfolding_S(I n) {
    while (bits::test(n, 0)) n >>= 1;
    if (n == 0) return Sign::plus();
    return Sign::from_parity(bits::test(n, 1));
}

/// s(0) = 1, s(2n) = (-1)^n s(n), s(2n+1) = s(n).
template <IndexType I>
Sign sign_s(I n) {
    Sign acc;
    while (n != 0) {
        if (!bits::test(n, 0)) acc *= Sign::from_parity(bits::test(n, 1));
        n >>= 1;
    }
    return acc;
}

/// v(0) = 1, v(2n+1) = v(n), v(4n) = (-1)^n v(2n), v(4n+2) = v(2n).
template <IndexType I>
Sign sign_v(I n) {
    Sign acc;
    while (n != 0) {
        if (bits::test(n, 0)) {
            n >>= 1;
        } else if (!bits::test(n, 1)) {
            acc *= Sign::from_parity(bits::test(n, 2));
            n >>= 1;
        } else {
            // 4q+2 -> 2q
            n >>= 1;
            n -= 1;
        }
    }
    return acc;
}

/// Pairs e_{i+1}e_i = 10 with i >= 1, plus one if e_1e_0 = 11.
template <IndexType I>
unsigned delta_pairs(const I& n) {
    unsigned count = 0;
    const unsigned len = bits::length(n);
    for (unsigned i = 1; i + 1 < len; ++i) {
        if (bits::test(n, i + 1) && !bits::test(n, i)) ++count;
    }
    if (bits::test(n, 0) && bits::test(n, 1)) ++count;
    return count;
}

/// Overlapping pairs 11 in the binary expansion.
template <IndexType I>
unsigned rho_pairs(const I& n) {
    return bits::popcount(I(n & (n >> 1)));
}

/// Golay-Rudin-Shapiro sign via r(2n) = r(n), r(2n+1) = (-1)^n r(n).
template <IndexType I>
Sign grs_r(I n) {
    Sign acc;
    while (n != 0) {
        if (bits::test(n, 0)) acc *= Sign::from_parity(bits::test(n, 1));
        n >>= 1;
    }
    return acc;
}

template <IndexType I>
unsigned digit_sum(const I& n) {
    return bits::popcount(n);
}

/// Total number of 1-digits in the binary expansions of 0, 1, ..., n-1.
template <IndexType I>
I ones_total(const I& n) {
    I total = 0;
    const unsigned len = bits::length(n);
    for (unsigned i = 0; i < len; ++i) {
        // Position i cycles with period 2^{i+1}: 2^i zeros then 2^i ones.
        const I full = n >> (i + 1);
        const I rem = bits::low(n, i + 1);
        total += full << i;
        const I half = bits::pow2<I>(i);
        if (rem > half) total += rem - half;
    }
    return total;
}

namespace detail {

// Grows on demand; entries never change once written.
struct NonsquashTable {
    std::mutex mu;
    std::vector<BigInt> b{0, 0, 1, 2};
};

inline NonsquashTable& nonsquash_table() {
    static NonsquashTable t;
    return t;
}

}  // namespace detail

/// Non-squashing partitions of n into distinct parts, from
/// b(2) = 1, b(3) = 2, b(2m) = b(2m-1) + b(m) - 1, b(2m+1) = b(2m) + 1.
inline BigInt nonsquash_b(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("nonsquash_b: requires n >= 2");
    auto& table = detail::nonsquash_table();
    std::lock_guard lock(table.mu);
    auto& b = table.b;
    if (n >= b.size()) b.reserve(n + 1);
    for (std::uint64_t k = b.size(); k <= n; ++k) {
        b.push_back(k % 2 == 0 ? BigInt(b[k - 1] + b[k / 2] - 1) : BigInt(b[k - 1] + 1));
    }
    return b[n];
}

}  // namespace catmod2::seq
