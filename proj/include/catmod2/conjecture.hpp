#pragma once

// Empirical scan of the conjectured values of d(M n, m) and d(M n - m, m) for
// the 0/1 sequence, M = 2^{K+1} the smallest power of two >= m:
//   m = 2r > 2:      d(Mn, m) = 1,       d(Mn - m, m) = (-1)^r
//   m = 2r + 1 >= 3: d(Mn, m) = D(Mn),   d(Mn - m, m) = (-1)^{n + eps} D(Mn - m)
// with eps in {0, 1} depending on m only. The scan reports, it never asserts.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "determinant.hpp"
#include "hankel.hpp"
#include "signs.hpp"

namespace catmod2 {

struct ConjectureViolation {
    std::uint64_t n;
    std::uint64_t index;  // argument of d(., m)
    int expected;
    int got;
};

struct ConjectureReport {
    enum class Status { conforms, violates, not_applicable };
    std::uint64_t m = 0;
    std::uint64_t modulus = 0;
    std::uint64_t max_n = 0;
    Status status = Status::not_applicable;
    std::optional<int> epsilon;  // odd m only
    std::vector<ConjectureViolation> violations;
    std::size_t spot_checks = 0;  // recursion values re-checked against Bareiss
    std::size_t spot_failures = 0;

    std::string status_name() const {
        switch (status) {
            case Status::conforms: return "conforms";
            case Status::violates: return "violates";
            case Status::not_applicable: return "not-applicable";
        }
        return "?";
    }

    std::string summary() const {
        std::ostringstream os;
        os << "m=" << m << " M=" << modulus << " max_n=" << max_n << " status=" << status_name();
        if (epsilon) os << " epsilon=" << *epsilon;
        os << " violations=" << violations.size() << " spot_checks=" << spot_checks
           << " spot_failures=" << spot_failures;
        return os.str();
    }
};

/// Largest argument re-evaluated by dense elimination during a scan.
inline constexpr std::uint64_t kConjectureSpotLimit = 96;

inline ConjectureReport conjecture_scan(std::uint64_t m, std::uint64_t max_n) {
    ConjectureReport rep;
    rep.m = m;
    rep.max_n = max_n;
    if (m < 2) throw std::invalid_argument("conjecture_scan: m must be >= 2");
    rep.modulus = std::uint64_t{1} << bits::ceil_log2(m);
    if (m == 2) return rep;  // stated for m > 2 only

    const std::uint64_t M = rep.modulus;
    auto value = [&](std::uint64_t idx) {
        const int v = d_shift_int(idx, m);
        if (idx <= kConjectureSpotLimit) {
            ++rep.spot_checks;
            const BigInt direct = det_bareiss(
                build_matrix(SequenceRule::make(RuleKind::unit, static_cast<unsigned>(m)), static_cast<std::size_t>(idx)));
            if (direct != v) ++rep.spot_failures;
        }
        return v;
    };

    // For odd m each n votes for the eps that makes the second identity hold.
    std::vector<std::pair<std::uint64_t, int>> votes;
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        const std::uint64_t top = M * n;
        const std::uint64_t low = top - m;
        const int at_top = value(top);
        const int at_low = value(low);
        if (m % 2 == 0) {
            const int want_low = (m / 2) % 2 == 0 ? 1 : -1;
            if (at_top != 1) rep.violations.push_back({n, top, 1, at_top});
            if (at_low != want_low) rep.violations.push_back({n, low, want_low, at_low});
        } else {
            const int want_top = D_sign(top).value();
            if (at_top != want_top) rep.violations.push_back({n, top, want_top, at_top});
            const int base = D_sign(low).value();
            if (at_low == 0 || base == 0) {
                rep.violations.push_back({n, low, base, at_low});
                continue;
            }
            // at_low = (-1)^{n + eps} base
            const int parity = (at_low == base ? 0 : 1);
            votes.emplace_back(n, static_cast<int>((parity + n) % 2));
        }
    }
    if (m % 2 == 1 && !votes.empty()) {
        rep.epsilon = votes.front().second;
        for (const auto& [n, eps] : votes) {
            if (eps == *rep.epsilon) continue;
            const std::uint64_t low = M * n - m;
            const int base = D_sign(low).value();
            const int expected = ((n + *rep.epsilon) % 2 == 0) ? base : -base;
            rep.violations.push_back({n, low, expected, -expected});
        }
    }
    rep.status = rep.violations.empty() && rep.spot_failures == 0 ? ConjectureReport::Status::conforms
                                                                   : ConjectureReport::Status::violates;
    return rep;
}

}  // namespace catmod2
