#pragma once

// Closed-form and recursive evaluators for the 0/1 sequence a_n = [n+1 is a
// power of two]:
//     d(n)    = det(a_{i+j})        = (-1)^binom(n,2)
//     D(n)    = det(a_{i+j+1})      = (-1)^delta(n)
//     T_n     = D(n) D(n+2)
//     d(n, m) = det(a_{i+j+m})      in {-1, 0, 1}

#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "determinant.hpp"
#include "hankel.hpp"
#include "seq.hpp"
#include "sign.hpp"

namespace catmod2 {

enum class DMethod { delta, recurrence, paperfolding_product };
enum class TMethod { ratio, recurrence, structural, nonsquash };

template <IndexType I>
Sign d_sign(const I& n) {
    return binom2_sign(to_u64(bits::low(n, 2)));
}

/// D(2n) = (-1)^binom(n,2) D(n), D(2n+1) = (-1)^binom(n+1,2) D(n).
template <IndexType I>
Sign D_sign_recurrence(I n) {
    Sign acc;
    while (n != 0) {
        const bool odd = bits::test(n, 0);
        n >>= 1;
        const std::uint64_t low = to_u64(bits::low(n, 2));
        acc *= binom2_sign(odd ? low + 1 : low);
    }
    return acc;
}

template <IndexType I>
Sign D_sign(const I& n, DMethod method = DMethod::delta) {
    switch (method) {
        case DMethod::delta: return Sign::from_parity(seq::delta_pairs(n) & 1u);
        case DMethod::recurrence: return D_sign_recurrence(n);
        case DMethod::paperfolding_product: {
            // O(n); kept as the definition.
            Sign acc;
            for (I j = 0; j < n; ++j) acc *= seq::paperfolding_S(j);
            return acc;
        }
    }
    throw std::invalid_argument("D_sign: unknown method");
}

namespace detail {

struct TTable {
    std::mutex mu;
    std::vector<std::int8_t> t{1, -1};
};

inline TTable& t_table() {
    static TTable table;
    return table;
}

/// T_{2n} = T_{2n-1} T_{n-1}, T_{2n+1} = -T_{2n}, T_0 = 1, T_1 = -1.
inline Sign T_recurrence(std::uint64_t n) {
    auto& table = t_table();
    std::lock_guard lock(table.mu);
    auto& t = table.t;
    if (n >= t.size()) t.reserve(n + 1);
    for (std::uint64_t i = t.size(); i <= n; ++i)
        t.push_back(static_cast<std::int8_t>(i % 2 == 0 ? t[i - 1] * t[i / 2 - 1] : -t[i - 1]));
    return Sign::from_int(t[n]);
}

}  // namespace detail

/// T_{2n+1} = -T_{2n}, T_{4n} = (-1)^n, T_{2^{k+1}q + 2^k - 2} = (-1)^{q+1} for k >= 2.
template <IndexType I>
Sign T_structural(const I& n) {
    if (bits::test(n, 0)) return -T_structural(I(n - 1));
    if (!bits::test(n, 1)) return Sign::from_parity(bits::test(n, 2));
    const I shifted = n + 2;  // = 2^k (2q + 1)
    const unsigned k = bits::valuation(shifted);
    return Sign::from_parity(!bits::test(shifted, k + 1));
}

template <IndexType I>
Sign T_int(const I& n, TMethod method = TMethod::ratio) {
    switch (method) {
        case TMethod::ratio: return D_sign(n) * D_sign(I(n + 2));
        case TMethod::recurrence: return detail::T_recurrence(to_u64(n));
        case TMethod::structural: return T_structural(n);
        case TMethod::nonsquash: {
            const BigInt b = seq::nonsquash_b(to_u64(n) + 2);
            return Sign::from_parity(!bits::test(b, 0));
        }
    }
    throw std::invalid_argument("T_int: unknown method");
}

struct Favard {
    int s;
    int t;
    bool operator==(const Favard&) const = default;
};

/// Three-term coefficients of the monic orthogonal polynomials for a_n:
/// t_n = T_{2n} T_{2n+1}, s_0 = T_0, s_n = T_{2n-1} + T_{2n}.
inline Favard favard_st(std::uint64_t n) {
    const int t = (T_int(2 * n) * T_int(2 * n + 1)).value();
    const int s = n == 0 ? T_int<std::uint64_t>(0).value() : T_int(2 * n - 1).value() + T_int(2 * n).value();
    return {s, t};
}

/// One interval-reversal step of the shifted recursion:
///     d(n, m) = sign * x_{2^level - 1}^exponent * d(next, m).
struct ShiftStep {
    Sign sign;
    unsigned level;
    std::int64_t exponent;
    std::uint64_t next;
};

/// Outcome of unwinding the shifted recursion down to the oracle region.
struct ShiftReduction {
    bool zero = false;
    std::vector<ShiftStep> steps;
    std::uint64_t base_n = 0;
};

/// Below this size d(n, m) is read off the exact oracle.
inline std::uint64_t shift_base_threshold(std::uint64_t m) {
    const std::uint64_t modulus = std::uint64_t{1} << bits::ceil_log2(m);  // 2^{K+1}
    return std::max<std::uint64_t>(2 * modulus, 16);
}

/// True when 2^k - m < n < 2^k for some k (a row of zeros).
inline bool shifted_has_zero_row(std::uint64_t n, std::uint64_t m) {
    const std::uint64_t above = std::uint64_t{1} << bits::length(n);  // smallest power of two > n
    return n + m > above;
}

inline ShiftReduction reduce_shifted(std::uint64_t n, std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("reduce_shifted: m must be >= 2");
    ShiftReduction out;
    const std::uint64_t r = m / 2;
    const std::uint64_t threshold = shift_base_threshold(m);
    while (n >= threshold) {
        if (shifted_has_zero_row(n, m)) {
            out.zero = true;
            return out;
        }
        const unsigned k = bits::ceil_log2(n + m);
        const std::uint64_t half = std::uint64_t{1} << (k - 1);
        const std::uint64_t start = half - r;  // n = start + j
        if (n < start) throw std::logic_error("reduce_shifted: index outside every reversal interval");
        const std::uint64_t j = n - start;
        ShiftStep step;
        step.level = k;
        if (m % 2 == 1) {
            step.exponent = static_cast<std::int64_t>(2 * j + 1);
            step.sign = binom2_sign(2 * j + 1);
            step.next = start - j - 1;
        } else {
            if (j == 0) throw std::logic_error("reduce_shifted: empty reversal interval");
            step.exponent = static_cast<std::int64_t>(2 * j);
            step.sign = binom2_sign(2 * j);
            step.next = start - j;
        }
        out.steps.push_back(step);
        n = step.next;
    }
    out.base_n = n;
    return out;
}

/// d(n, m) for the 0/1 sequence.
inline int d_shift_int(std::uint64_t n, std::uint64_t m) {
    if (m == 0) return d_sign(n).value();
    if (m == 1) return D_sign(n).value();
    const ShiftReduction red = reduce_shifted(n, m);
    if (red.zero) return 0;
    Sign acc;
    for (const auto& s : red.steps) acc *= s.sign;
    const BigInt base = det_bareiss(build_matrix(SequenceRule::make(RuleKind::unit, static_cast<unsigned>(m)),
                                                 static_cast<std::size_t>(red.base_n)));
    return acc.value() * base.convert_to<int>();
}

}  // namespace catmod2
