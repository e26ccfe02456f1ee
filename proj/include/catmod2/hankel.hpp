#pragma once

// Hankel matrices (a_{i+j+m}) of sequences supported on 2^k - 1:
//     a_t = x_{2^k-1}  if t = 2^k - 1,  0 otherwise,
// where the rule decides what x_{2^k-1} is.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "laurent.hpp"

namespace catmod2 {

enum class RuleKind {
    unit,      // every x = 1
    generic,   // x_{2^k-1} stays an indeterminate
    powers,    // x_{2^k-1} = x^k
    doubling,  // x_{2^k-1} = x^{2^k-1}
    grs,       // x_1 = 1, x_{2^k-1} = (-1)^k for k > 1
    custom,    // integer assignment k -> value
};

inline const char* rule_name(RuleKind k) {
    switch (k) {
        case RuleKind::unit: return "unit";
        case RuleKind::generic: return "generic";
        case RuleKind::powers: return "powers";
        case RuleKind::doubling: return "doubling";
        case RuleKind::grs: return "grs";
        case RuleKind::custom: return "custom";
    }
    return "?";
}

inline std::optional<RuleKind> parse_rule(std::string_view s) {
    for (auto k : {RuleKind::unit, RuleKind::generic, RuleKind::powers, RuleKind::doubling, RuleKind::grs})
        if (s == rule_name(k)) return k;
    return std::nullopt;
}

struct SequenceRule {
    RuleKind kind = RuleKind::unit;
    unsigned shift = 0;
    std::map<unsigned, BigInt> assignment;  // custom only

    static SequenceRule make(RuleKind kind, unsigned shift = 0) { return {kind, shift, {}}; }
    static SequenceRule custom(std::map<unsigned, BigInt> values, unsigned shift = 0) {
        return {RuleKind::custom, shift, std::move(values)};
    }

    bool integer_valued() const {
        return kind == RuleKind::unit || kind == RuleKind::grs || kind == RuleKind::custom;
    }

    VarNaming naming() const {
        return kind == RuleKind::powers || kind == RuleKind::doubling ? VarNaming::single : VarNaming::indexed;
    }

    /// The value of x_{2^k-1}.
    LaurentPoly level_value(unsigned k) const {
        switch (kind) {
            case RuleKind::unit: return 1;
            case RuleKind::generic: return LaurentPoly::var(k);
            case RuleKind::powers: return LaurentPoly::var(0, k);
            case RuleKind::doubling:
                if (k >= 63) throw std::overflow_error("doubling rule: exponent overflow");
                return LaurentPoly::var(0, static_cast<std::int64_t>((std::uint64_t{1} << k) - 1));
            case RuleKind::grs:
                if (k == 0) throw std::domain_error("grs rule leaves x0 undefined");
                return k == 1 ? LaurentPoly(1) : LaurentPoly(k % 2 == 0 ? 1 : -1);
            case RuleKind::custom: {
                auto it = assignment.find(k);
                if (it == assignment.end())
                    throw std::invalid_argument("custom rule: no value for level " + std::to_string(k));
                return it->second;
            }
        }
        return 0;
    }

    /// k such that t + shift + 1 = 2^k, if any.
    std::optional<unsigned> level(std::uint64_t t) const {
        const std::uint64_t v = t + shift + 1;
        if (!bits::is_pow2(v)) return std::nullopt;
        return bits::length(v) - 1;
    }

    /// a_{t+shift}.
    LaurentPoly entry(std::uint64_t t) const {
        auto k = level(t);
        return k ? level_value(*k) : LaurentPoly();
    }
};

/// n x n Hankel matrix stored by its nonzero antidiagonals i + j = t.
class HankelMatrix {
   public:
    HankelMatrix(SequenceRule rule, std::size_t n) : rule_(std::move(rule)), n_(n) {
        if (n == 0) return;
        for (unsigned k = 0; k < 63; ++k) {
            const std::uint64_t p = std::uint64_t{1} << k;
            if (p < rule_.shift + 1) continue;
            const std::uint64_t t = p - 1 - rule_.shift;
            if (t > 2 * (n - 1)) break;
            auto v = rule_.level_value(k);
            if (!v.is_zero()) diags_.push_back({t, std::move(v)});
        }
    }

    std::size_t size() const noexcept { return n_; }
    const SequenceRule& rule() const noexcept { return rule_; }
    const std::vector<std::pair<std::uint64_t, LaurentPoly>>& antidiagonals() const noexcept { return diags_; }

    const LaurentPoly& entry(std::size_t i, std::size_t j) const {
        static const LaurentPoly zero;
        const std::uint64_t t = i + j;
        for (const auto& [d, v] : diags_)
            if (d == t) return v;
        return zero;
    }

    BigInt entry_int(std::size_t i, std::size_t j) const { return entry(i, j).constant(); }

    /// Row-major grid with right-aligned cells.
    std::string render() const {
        std::vector<std::string> cells(n_ * n_);
        std::size_t w = 1;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                cells[i * n_ + j] = entry(i, j).str(rule_.naming());
                w = std::max(w, cells[i * n_ + j].size());
            }
        std::ostringstream os;
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                if (j) os << ' ';
                os << std::string(w - cells[i * n_ + j].size(), ' ') << cells[i * n_ + j];
            }
            os << '\n';
        }
        return os.str();
    }

   private:
    SequenceRule rule_;
    std::size_t n_;
    std::vector<std::pair<std::uint64_t, LaurentPoly>> diags_;
};

inline HankelMatrix build_matrix(const SequenceRule& rule, std::size_t n) { return HankelMatrix(rule, n); }

}  // namespace catmod2
