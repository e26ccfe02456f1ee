#pragma once

// Explicit LDL^t factorizations of the 0/1 Hankel matrices:
//     (a_{i+j})   = A D A^t,  a(i,j) = s(i) s(j) [binom(2i+1, i-j) odd],  D = diag((-1)^i)
//     (a_{i+j+1}) = C E C^t,  c(i,j) = v(i) v(j) [binom(2i+2, i-j) odd],  E = diag(S(i))

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bigint.hpp"
#include "seq.hpp"

namespace catmod2 {

/// binom(a, b) mod 2: 1 iff the binary digits of b are a subset of those of a.
inline int binom_parity(std::uint64_t a, std::int64_t b) {
    if (b < 0 || static_cast<std::uint64_t>(b) > a) return 0;
    const auto ub = static_cast<std::uint64_t>(b);
    return (ub & a) == ub ? 1 : 0;
}

inline int binom_parity(const BigInt& a, const BigInt& b) {
    if (b < 0 || b > a) return 0;
    return (b & a) == b ? 1 : 0;
}

/// Small dense integer matrix, row-major.
struct IntMatrix {
    std::size_t n = 0;
    std::vector<long long> a;

    explicit IntMatrix(std::size_t size) : n(size), a(size * size, 0) {}

    long long& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    long long operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    IntMatrix transposed() const {
        IntMatrix t(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
        if (x.n != y.n) throw std::invalid_argument("IntMatrix: size mismatch");
        IntMatrix r(x.n);
        for (std::size_t i = 0; i < x.n; ++i)
            for (std::size_t k = 0; k < x.n; ++k) {
                const long long v = x(i, k);
                if (v == 0) continue;
                for (std::size_t j = 0; j < x.n; ++j) r(i, j) += v * y(k, j);
            }
        return r;
    }

    bool operator==(const IntMatrix&) const = default;
};

inline IntMatrix unit_hankel(std::size_t n, std::uint64_t shift) {
    IntMatrix h(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = seq::bit_a<std::uint64_t>(i + j + shift);
    return h;
}

inline IntMatrix plain_lower_factor(std::size_t n) {
    IntMatrix f(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            f(i, j) = (seq::sign_s<std::uint64_t>(i) * seq::sign_s<std::uint64_t>(j)).value() *
                      binom_parity(2 * i + 1, static_cast<std::int64_t>(i - j));
    return f;
}

inline IntMatrix plain_diagonal(std::size_t n) {
    IntMatrix d(n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = i % 2 == 0 ? 1 : -1;
    return d;
}

inline IntMatrix shifted_lower_factor(std::size_t n) {
    IntMatrix f(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            f(i, j) = (seq::sign_v<std::uint64_t>(i) * seq::sign_v<std::uint64_t>(j)).value() *
                      binom_parity(2 * i + 2, static_cast<std::int64_t>(i - j));
    return f;
}

inline IntMatrix shifted_diagonal(std::size_t n) {
    IntMatrix d(n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = seq::paperfolding_S<std::uint64_t>(i).value();
    return d;
}

inline bool ldlt_verify_plain(std::size_t n) {
    if (n == 0) throw std::invalid_argument("ldlt_verify_plain: n must be >= 1");
    const IntMatrix f = plain_lower_factor(n);
    return f * plain_diagonal(n) * f.transposed() == unit_hankel(n, 0);
}

inline bool ldlt_verify_shifted(std::size_t n) {
    if (n == 0) throw std::invalid_argument("ldlt_verify_shifted: n must be >= 1");
    const IntMatrix f = shifted_lower_factor(n);
    return f * shifted_diagonal(n) * f.transposed() == unit_hankel(n, 1);
}

}  // namespace catmod2
