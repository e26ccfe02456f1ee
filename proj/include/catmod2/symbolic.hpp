#pragma once

// Symbolic determinants for a_n = x_n on n = 2^k - 1 and 0 elsewhere. Every
// value is a single signed Laurent monomial in x0, x1, x3, x7, ... (variable
// index k is x_{2^k-1}), or zero for some shifted determinants.

#include <cstdint>
#include <stdexcept>

#include "determinant.hpp"
#include "hankel.hpp"
#include "laurent.hpp"
#include "profiles.hpp"
#include "seq.hpp"
#include "sign.hpp"
#include "signs.hpp"

namespace catmod2 {

inline LaurentPoly signed_monomial(Sign s, const LaurentPoly& m) { return s.negative() ? -m : m; }

/// d(n) from the lambda table.
inline LaurentPoly generic_d(std::uint64_t n) {
    const auto prof = lambda_profile(n);
    return signed_monomial(prof.sign(), prof.monomial());
}

/// d(n) = (-1)^binom(beta,2) x_{alpha}^beta d(n - beta) with alpha = 2^k - 1,
/// 2^{k-1} < n <= 2^k and beta = 2n - 2^k.
inline LaurentPoly generic_d_recursive(std::uint64_t n) {
    Sign sign;
    ExponentVector ev;
    while (n > 0) {
        const unsigned k = bits::ceil_log2(n);
        const std::uint64_t beta = 2 * n - (std::uint64_t{1} << k);
        sign *= binom2_sign(beta);
        ev.add(k, static_cast<std::int64_t>(beta));
        n -= beta;
    }
    return signed_monomial(sign, LaurentPoly::monomial(1, ev));
}

/// D(n) from the mu table.
inline LaurentPoly generic_D(std::uint64_t n) {
    const auto prof = mu_profile(n);
    return signed_monomial(prof.sign(), prof.monomial());
}

/// D(n) = (-1)^binom(len,2) x_{gamma}^len D(gamma - n) with gamma = 2^k - 1,
/// 2^{k-1} < n + 1 <= 2^k and len = 2n - gamma the reversed interval length.
inline LaurentPoly generic_D_recursive(std::uint64_t n) {
    Sign sign;
    ExponentVector ev;
    while (n > 0) {
        const unsigned k = bits::ceil_log2(n + 1);
        const std::uint64_t gamma = (std::uint64_t{1} << k) - 1;
        const std::uint64_t len = 2 * n - gamma;
        sign *= binom2_sign(len);
        ev.add(k, static_cast<std::int64_t>(len));
        n = gamma - n;
    }
    return signed_monomial(sign, LaurentPoly::monomial(1, ev));
}

/// T_n = D(n) D(n+2) / D(n+1)^2.
inline LaurentPoly generic_T(std::uint64_t n) {
    return generic_D(n) * generic_D(n + 2) / generic_D(n + 1).pow(2);
}

/// T_{2n+1} = -T_{2n}, T_{4n} = (-1)^n x3/x1,
/// T_{2^{k+1}q + 2^k - 1} = (-1)^q x1 x_{2^{k+1}-1} / x_{2^k-1}^2 for k >= 2.
inline LaurentPoly generic_T_structural(std::uint64_t n) {
    if (n % 4 == 0) {
        ExponentVector ev = ExponentVector::var(2) * ExponentVector::var(1, -1);
        return signed_monomial(Sign::from_parity((n / 4) & 1u), LaurentPoly::monomial(1, ev));
    }
    if (n % 4 == 1) return -generic_T_structural(n - 1);
    if (n % 4 == 2) return -generic_T_structural(n + 1);
    const unsigned k = bits::valuation(n + 1);
    const std::uint64_t q = (n + 1) >> (k + 1);
    ExponentVector ev = ExponentVector::var(1) * ExponentVector::var(k + 1) * ExponentVector::var(k, -2);
    return signed_monomial(Sign::from_parity(q & 1u), LaurentPoly::monomial(1, ev));
}

/// t_n = d(n) d(n+2) / d(n+1)^2.
inline LaurentPoly generic_t(std::uint64_t n) {
    return generic_d(n) * generic_d(n + 2) / generic_d(n + 1).pow(2);
}

/// t_{2n} = -x1^2/x0^2, t_{2^k q + 2^{k-1} - 1} = -x0^2 x_{2^k-1}^2 / x_{2^{k-1}-1}^4 for k >= 2.
inline LaurentPoly generic_t_structural(std::uint64_t n) {
    if (n % 2 == 0) return -LaurentPoly::monomial(1, ExponentVector::var(1, 2) * ExponentVector::var(0, -2));
    const unsigned k = bits::valuation(n + 1) + 1;
    ExponentVector ev = ExponentVector::var(0, 2) * ExponentVector::var(k, 2) * ExponentVector::var(k - 1, -4);
    return -LaurentPoly::monomial(1, ev);
}

/// h(n) = d(n) d(n+1) / D(n)^2, which is (-1)^n x0.
inline LaurentPoly ratio_h(std::uint64_t n) {
    return generic_d(n) * generic_d(n + 1) / generic_D(n).pow(2);
}

/// Substitutes the rule's values for every x_{2^k-1}.
inline LaurentPoly specialize(RuleKind kind, const LaurentPoly& p) {
    const SequenceRule rule = SequenceRule::make(kind);
    return p.substitute([&](unsigned k) { return rule.level_value(k); });
}

/// d(n) (shifted = false) or D(n) (shifted = true) under a specialization.
inline LaurentPoly specialize_det(RuleKind kind, bool shifted, std::uint64_t n) {
    return specialize(kind, shifted ? generic_D(n) : generic_d(n));
}

/// Independent closed forms for the specialized determinants, in the single
/// variable x (index 0) where applicable:
///   powers:   d = (-1)^binom(n,2) x^{2a(n)},      D = (-1)^delta(n) x^{a(n)+a(n+1)}
///   doubling: d = (-1)^binom(n,2) x^{2binom(n,2)}, D = D_sign(n) x^{n^2}
///   grs:      D = r(n)
/// with a(n) the number of 1-digits in 0..n-1.
inline LaurentPoly specialized_closed_form(RuleKind kind, bool shifted, std::uint64_t n) {
    const Sign sign = shifted ? D_sign(n) : d_sign(n);
    auto x_pow = [&](std::uint64_t e) {
        return signed_monomial(sign, LaurentPoly::var(0, static_cast<std::int64_t>(e)));
    };
    switch (kind) {
        case RuleKind::unit: return sign.value();
        case RuleKind::generic: return shifted ? generic_D(n) : generic_d(n);
        case RuleKind::powers:
            return x_pow(shifted ? seq::ones_total(n) + seq::ones_total(n + 1) : 2 * seq::ones_total(n));
        case RuleKind::doubling: return x_pow(shifted ? n * n : n * (n - (n > 0)));
        case RuleKind::grs:
            if (!shifted) throw std::domain_error("grs specialization is defined for the shifted determinant only");
            return seq::grs_r(n).value();
        case RuleKind::custom: break;
    }
    throw std::invalid_argument("specialized_closed_form: unsupported rule");
}

/// d(n, m) = det(a_{i+j+m}) for the symbolic sequence.
inline LaurentPoly d_shift_generic(std::uint64_t n, std::uint64_t m) {
    if (m == 0) return generic_d(n);
    if (m == 1) return generic_D(n);
    const ShiftReduction red = reduce_shifted(n, m);
    if (red.zero) return {};
    Sign sign;
    ExponentVector ev;
    for (const auto& s : red.steps) {
        sign *= s.sign;
        ev.add(s.level, s.exponent);
    }
    const LaurentPoly base =
        det_cofactor(build_matrix(SequenceRule::make(RuleKind::generic, static_cast<unsigned>(m)),
                                  static_cast<std::size_t>(red.base_n)));
    return signed_monomial(sign, LaurentPoly::monomial(1, ev)) * base;
}

}  // namespace catmod2
