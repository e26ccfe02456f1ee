#pragma once

// Continued fractions expanded into truncated power series:
//   S-fraction  1/(1 - c0 z/(1 - c1 z/(1 - ...)))
//   J-fraction  1/(1 - s0 z - t0 z^2/(1 - s1 z - t1 z^2/(1 - ...)))
// Evaluation is bottom-up with the tail below the last level set to 1.

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "bigint.hpp"
#include "seq.hpp"
#include "series.hpp"
#include "signs.hpp"

namespace catmod2 {

struct CFSpec {
    enum class Shape { s_fraction, j_fraction };
    Shape shape = Shape::s_fraction;
    std::vector<Rational> c;  // s-fraction coefficients
    std::vector<Rational> s;  // j-fraction linear coefficients
    std::vector<Rational> t;  // j-fraction quadratic coefficients

    static CFSpec s_fraction(std::vector<Rational> coeffs) { return {Shape::s_fraction, std::move(coeffs), {}, {}}; }
    static CFSpec j_fraction(std::vector<Rational> s, std::vector<Rational> t) {
        if (s.size() != t.size()) throw std::invalid_argument("CFSpec: s and t differ in length");
        return {Shape::j_fraction, {}, std::move(s), std::move(t)};
    }

    std::size_t depth() const { return shape == Shape::s_fraction ? c.size() : s.size(); }

    /// Largest series order fully determined by the available levels.
    std::size_t max_order() const { return shape == Shape::s_fraction ? depth() : 2 * depth(); }
};

class InsufficientDepth : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

inline TruncatedSeries cf_expand(const CFSpec& spec, std::size_t order) {
    if (order == 0) throw std::invalid_argument("cf_expand: order must be positive");
    if (spec.depth() == 0 || spec.max_order() < order)
        throw InsufficientDepth("cf_expand: continued fraction too shallow for the requested order");
    TruncatedSeries f = TruncatedSeries::constant(order, 1);
    const TruncatedSeries one = TruncatedSeries::constant(order, 1);
    for (std::size_t l = spec.depth(); l-- > 0;) {
        TruncatedSeries den = one;
        if (spec.shape == CFSpec::Shape::s_fraction) {
            den = den - f.shifted(spec.c[l], 1);
        } else {
            den = den - one.shifted(spec.s[l], 1) - f.shifted(spec.t[l], 2);
        }
        f = series_inverse(den);
    }
    return f;
}

/// sum_k (+-1)^k z^{2^k - 1} mod z^N.
inline TruncatedSeries target_series(std::size_t order, bool alternating) {
    if (order == 0) throw std::invalid_argument("target_series: order must be positive");
    TruncatedSeries f(order);
    int sign = 1;
    for (std::uint64_t p = 1; p - 1 < order; p *= 2, sign = alternating ? -sign : sign) f[p - 1] = sign;
    return f;
}

enum class CFIdentity { sfraction_T, jfraction_favard, sfraction_grs };

inline const char* identity_name(CFIdentity id) {
    switch (id) {
        case CFIdentity::sfraction_T: return "sfraction_T";
        case CFIdentity::jfraction_favard: return "jfraction_favard";
        case CFIdentity::sfraction_grs: return "sfraction_grs";
    }
    return "?";
}

/// S-fraction with c_n = T_n.
inline CFSpec t_sfraction(std::size_t depth) {
    std::vector<Rational> c;
    for (std::uint64_t n = 0; n < depth; ++n) c.emplace_back(T_int(n).value());
    return CFSpec::s_fraction(std::move(c));
}

/// J-fraction with the three-term coefficients of favard_st.
inline CFSpec favard_jfraction(std::size_t depth) {
    std::vector<Rational> s, t;
    for (std::uint64_t n = 0; n < depth; ++n) {
        const Favard f = favard_st(n);
        s.emplace_back(f.s);
        t.emplace_back(f.t);
    }
    return CFSpec::j_fraction(std::move(s), std::move(t));
}

/// 1/(1 + r(0)r(2) z/(1 + r(1)r(3) z/(1 + ...))) written as an S-fraction.
inline CFSpec grs_sfraction(std::size_t depth) {
    std::vector<Rational> c;
    for (std::uint64_t n = 0; n < depth; ++n) c.emplace_back(-(seq::grs_r(n) * seq::grs_r(n + 2)).value());
    return CFSpec::s_fraction(std::move(c));
}

inline constexpr std::size_t kIdentityMaxOrder = 128;

inline bool verify_identity(CFIdentity id, std::size_t order) {
    if (order == 0 || order > kIdentityMaxOrder) throw std::invalid_argument("verify_identity: order must be in 1..128");
    switch (id) {
        case CFIdentity::sfraction_T: return cf_expand(t_sfraction(order), order) == target_series(order, false);
        case CFIdentity::jfraction_favard:
            return cf_expand(favard_jfraction((order + 1) / 2), order) == target_series(order, false);
        case CFIdentity::sfraction_grs: return cf_expand(grs_sfraction(order), order) == target_series(order, true);
    }
    return false;
}

}  // namespace catmod2
