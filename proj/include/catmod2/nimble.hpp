#pragma once

// m-nimble permutations: pi with i + pi(i) + m + 1 a power of two for every
// i. They index the nonzero terms of the Leibniz expansion of (a_{i+j+m}).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "sign.hpp"

namespace catmod2 {

class SignedPermutation {
   public:
    explicit SignedPermutation(std::vector<std::size_t> images) : images_(std::move(images)) {
        const std::size_t n = images_.size();
        std::vector<bool> seen(n, false);
        for (std::size_t v : images_) {
            if (v >= n || seen[v]) throw std::invalid_argument("SignedPermutation: not a bijection");
            seen[v] = true;
        }
        // Parity from the cycle decomposition: each cycle of length L contributes L-1 transpositions.
        std::fill(seen.begin(), seen.end(), false);
        bool odd = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (seen[i]) continue;
            std::size_t len = 0;
            for (std::size_t j = i; !seen[j]; j = images_[j]) seen[j] = true, ++len;
            odd ^= (len - 1) & 1;
        }
        sign_ = Sign::from_parity(odd);
    }

    const std::vector<std::size_t>& images() const noexcept { return images_; }
    std::size_t size() const noexcept { return images_.size(); }
    Sign sign() const noexcept { return sign_; }

    /// One-line notation, e.g. "02143" (digits joined by ',' once n > 10).
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (images_.size() > 10 && i) s += ',';
            s += std::to_string(images_[i]);
        }
        return s;
    }

    bool operator==(const SignedPermutation& o) const { return images_ == o.images_; }

   private:
    std::vector<std::size_t> images_;
    Sign sign_;
};

inline bool is_nimble_pair(std::uint64_t i, std::uint64_t j, std::uint64_t m) { return bits::is_pow2(i + j + m + 1); }

/// The unique m-nimble permutation of {0..n-1}, built by reversing the top
/// interval forced by the last row and recursing on the prefix; empty when
/// some prefix has a last row without an admissible column.
inline std::optional<SignedPermutation> nimble_solve(std::size_t n, std::uint64_t m) {
    std::vector<std::size_t> images(n);
    std::size_t top = n;
    while (top > 0) {
        // Last row top-1 needs (top-1) + j + m + 1 = 2^l with 0 <= j < top.
        const std::uint64_t need = top + m;
        const std::uint64_t power = std::uint64_t{1} << bits::ceil_log2(need);
        const std::uint64_t lo = power - need;
        if (lo >= top) return std::nullopt;
        for (std::size_t i = lo; i < top; ++i) images[i] = static_cast<std::size_t>(power - m - 1 - i);
        top = lo;
    }
    return SignedPermutation(std::move(images));
}

inline constexpr std::size_t kEnumerateMaxSize = 10;

/// Exhaustive search over all permutations with a nonzero Leibniz term.
inline std::vector<SignedPermutation> nimble_enumerate(std::size_t n, std::uint64_t m) {
    if (n > kEnumerateMaxSize) throw std::invalid_argument("nimble_enumerate: n must be <= 10");
    std::vector<SignedPermutation> out;
    std::vector<std::size_t> images(n);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            out.emplace_back(images);
            return;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || !is_nimble_pair(i, j, m)) continue;
            used[j] = true;
            images[i] = j;
            self(self, i + 1);
            used[j] = false;
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace catmod2
