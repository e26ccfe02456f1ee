#pragma once

// Exponent tables of the symbolic determinants
//     d(n) = (-1)^{sum binom(lambda_k,2)} prod_k x_{2^k-1}^{lambda_k(n)}
//     D(n) = (-1)^{sum binom(mu_k,2)}     prod_k x_{2^k-1}^{mu_k(n)}
// Both tables are periodic in n with period 2^{k+1}.

#include <cstdint>
#include <map>
#include <string>

#include "bigint.hpp"
#include "laurent.hpp"
#include "sign.hpp"

namespace catmod2 {

struct ExponentProfile {
    enum class Flavor { lambda, mu };
    Flavor flavor = Flavor::lambda;
    std::map<unsigned, std::uint64_t> entries;  // nonzero exponents only

    std::uint64_t operator[](unsigned k) const {
        auto it = entries.find(k);
        return it == entries.end() ? 0 : it->second;
    }

    /// (-1)^{sum_k binom(e_k, 2)}.
    Sign sign() const {
        bool odd = false;
        for (const auto& [k, e] : entries) odd ^= (e & 3u) >= 2;
        return Sign::from_parity(odd);
    }

    /// prod_k x_{2^k-1}^{e_k}, without the sign.
    LaurentPoly monomial() const {
        ExponentVector ev;
        for (const auto& [k, e] : entries) ev.set(k, static_cast<std::int64_t>(e));
        return LaurentPoly::monomial(1, ev);
    }

    bool operator==(const ExponentProfile&) const = default;
};

/// lambda_k(n): with p = n mod 2^{k+1} and h = 2^{k-1},
///   0 on [0, h],  2i at h + i,  2^k - 2i at 2^k + i,  0 on [3h, 4h].
inline std::uint64_t lambda_k(std::uint64_t n, unsigned k) {
    if (k == 0) return n & 1u;
    if (k >= 63) return 0;
    const std::uint64_t h = std::uint64_t{1} << (k - 1);
    const std::uint64_t p = n & (4 * h - 1);
    if (p <= h) return 0;
    if (p <= 2 * h) return 2 * (p - h);
    if (p <= 3 * h) return 2 * h - 2 * (p - 2 * h);
    return 0;
}

/// mu_k(n), k >= 1: with p = n mod 2^{k+1}, h = 2^{k-1}, 0 <= i < h,
///   0 at i,  2i + 1 at h + i,  2^k - 2i - 1 at 2^k + i,  0 at 3h + i.
inline std::uint64_t mu_k(std::uint64_t n, unsigned k) {
    if (k == 0 || k >= 63) return 0;
    const std::uint64_t h = std::uint64_t{1} << (k - 1);
    const std::uint64_t p = n & (4 * h - 1);
    if (p < h) return 0;
    if (p < 2 * h) return 2 * (p - h) + 1;
    if (p < 3 * h) return 2 * h - 2 * (p - 2 * h) - 1;
    return 0;
}

inline ExponentProfile lambda_profile(std::uint64_t n) {
    ExponentProfile prof{ExponentProfile::Flavor::lambda, {}};
    // lambda_k vanishes once 2^{k-1} >= n.
    for (unsigned k = 0, top = bits::length(n) + 1; k <= top; ++k)
        if (auto e = lambda_k(n, k)) prof.entries[k] = e;
    return prof;
}

inline ExponentProfile mu_profile(std::uint64_t n) {
    ExponentProfile prof{ExponentProfile::Flavor::mu, {}};
    for (unsigned k = 1, top = bits::length(n) + 1; k <= top; ++k)
        if (auto e = mu_k(n, k)) prof.entries[k] = e;
    return prof;
}

}  // namespace catmod2
