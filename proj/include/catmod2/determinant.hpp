#pragma once

// Exact determinant oracles.
//
//  * bareiss_determinant: fraction-free elimination over BigInt with row
//    swaps. While the current and previous pivots are units the per-step
//    row scaling is a sign, which is kept lazily per row so only rows with
//    a nonzero in the pivot column are touched.
//  * cofactor_determinant: Laplace expansion along the line (row or
//    column) with the fewest nonzeros, memoized on the remaining row and
//    column sets. Exact LaurentPoly arithmetic throughout.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "hankel.hpp"
#include "laurent.hpp"

namespace catmod2 {

/// Determinant of the row-major n x n matrix `a`.
inline BigInt bareiss_determinant(std::vector<BigInt> a, std::size_t n) {
    if (a.size() != n * n) throw std::invalid_argument("bareiss_determinant: size mismatch");
    if (n == 0) return 1;
    auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * n + j]; };

    std::vector<int> row_sign(n, 1);  // true row i = row_sign[i] * stored row i
    int swap_sign = 1;
    BigInt prev = 1;
    std::vector<std::size_t> pivot_cols;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && at(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap_ranges(a.begin() + p * n, a.begin() + (p + 1) * n, a.begin() + k * n);
            std::swap(row_sign[p], row_sign[k]);
            swap_sign = -swap_sign;
        }
        if (k + 1 == n) break;

        const BigInt pivot = row_sign[k] * at(k, k);
        pivot_cols.clear();
        for (std::size_t j = k + 1; j < n; ++j)
            if (at(k, j) != 0) pivot_cols.push_back(j);

        if (abs(pivot) == 1 && abs(prev) == 1) {
            // new = (pivot/prev) * old - prev * a_ik * a_kj
            const int ratio = (pivot == prev) ? 1 : -1;
            for (std::size_t i = k + 1; i < n; ++i) {
                const int old_sign = row_sign[i];
                row_sign[i] *= ratio;
                if (at(i, k) == 0) continue;
                const BigInt f = row_sign[i] * old_sign * prev * at(i, k) * row_sign[k];
                for (std::size_t j : pivot_cols) at(i, j) -= f * at(k, j);
                at(i, k) = 0;
            }
        } else {
            for (std::size_t i = k; i < n; ++i) {
                if (row_sign[i] == 1) continue;
                for (std::size_t j = k; j < n; ++j) at(i, j) = -at(i, j);
                row_sign[i] = 1;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                const BigInt aik = at(i, k);
                for (std::size_t j = k + 1; j < n; ++j) {
                    BigInt v = pivot * at(i, j);
                    if (aik != 0 && at(k, j) != 0) v -= aik * at(k, j);
                    at(i, j) = v / prev;
                }
                at(i, k) = 0;
            }
        }
        prev = pivot;
    }
    return swap_sign * row_sign[n - 1] * at(n - 1, n - 1);
}

/// Bareiss on an integer-valued Hankel matrix.
inline BigInt det_bareiss(const HankelMatrix& m) {
    if (!m.rule().integer_valued()) throw std::invalid_argument("det_bareiss: rule is not integer-valued");
    const std::size_t n = m.size();
    std::vector<BigInt> a(n * n);
    for (const auto& [t, v] : m.antidiagonals()) {
        const BigInt c = v.constant();
        for (std::size_t i = 0; i < n; ++i)
            if (t >= i && t - i < n) a[i * n + (t - i)] = c;
    }
    return bareiss_determinant(std::move(a), n);
}

namespace detail {

class CofactorExpansion {
   public:
    explicit CofactorExpansion(const HankelMatrix& m) : n_(m.size()), entries_(n_ * n_), row_nz_(n_), col_nz_(n_) {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                const auto& v = m.entry(i, j);
                if (v.is_zero()) continue;
                entries_[i * n_ + j] = v;
                row_nz_[i] |= std::uint64_t{1} << j;
                col_nz_[j] |= std::uint64_t{1} << i;
            }
    }

    LaurentPoly run() {
        const std::uint64_t full = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
        return solve(full, full);
    }

   private:
    struct KeyHash {
        std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const noexcept {
            return std::hash<std::uint64_t>{}(k.first * 0x9E3779B97F4A7C15ull ^ k.second);
        }
    };

    static int rank_below(std::uint64_t set, unsigned idx) {
        return std::popcount(set & ((std::uint64_t{1} << idx) - 1));
    }

    LaurentPoly solve(std::uint64_t rows, std::uint64_t cols) {
        if (rows == 0) return 1;
        const auto key = std::make_pair(rows, cols);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        // Line with the fewest nonzeros; a zero line ends the branch.
        int best = 65;
        bool by_row = true;
        unsigned line = 0;
        for (std::uint64_t r = rows; r; r &= r - 1) {
            const unsigned i = std::countr_zero(r);
            const int c = std::popcount(row_nz_[i] & cols);
            if (c < best) best = c, by_row = true, line = i;
        }
        for (std::uint64_t cs = cols; cs && best > 1; cs &= cs - 1) {
            const unsigned j = std::countr_zero(cs);
            const int c = std::popcount(col_nz_[j] & rows);
            if (c < best) best = c, by_row = false, line = j;
        }

        LaurentPoly sum;
        if (best > 0) {
            const std::uint64_t others = by_row ? (row_nz_[line] & cols) : (col_nz_[line] & rows);
            for (std::uint64_t o = others; o; o &= o - 1) {
                const unsigned other = std::countr_zero(o);
                const unsigned i = by_row ? line : other;
                const unsigned j = by_row ? other : line;
                const bool odd = (rank_below(rows, i) + rank_below(cols, j)) & 1;
                LaurentPoly minor = solve(rows & ~(std::uint64_t{1} << i), cols & ~(std::uint64_t{1} << j));
                if (minor.is_zero()) continue;
                LaurentPoly term = entries_[i * n_ + j] * minor;
                if (odd) sum -= term;
                else sum += term;
            }
        }
        memo_.emplace(key, sum);
        return sum;
    }

    std::size_t n_;
    std::vector<LaurentPoly> entries_;
    std::vector<std::uint64_t> row_nz_, col_nz_;
    std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, LaurentPoly, KeyHash> memo_;
};

}  // namespace detail

inline constexpr std::size_t kCofactorMaxSize = 64;

/// Sparse cofactor expansion; any rule, n <= 64.
inline LaurentPoly det_cofactor(const HankelMatrix& m) {
    if (m.size() > kCofactorMaxSize) throw std::invalid_argument("det_cofactor: size exceeds 64");
    if (m.size() == 0) return 1;
    return detail::CofactorExpansion(m).run();
}

/// Exact determinant: Bareiss for integer-valued rules, cofactor otherwise.
inline LaurentPoly det_oracle(const HankelMatrix& m) {
    if (m.rule().integer_valued()) return det_bareiss(m);
    return det_cofactor(m);
}

}  // namespace catmod2
