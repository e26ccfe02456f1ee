#pragma once

// Arbitrary-precision integer/rational aliases and the handful of binary
// digit primitives the sequence code needs. Every helper is templated over
// the index type so the same code runs on std::uint64_t and on BigInt.

#include <bit>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

namespace catmod2 {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <class I>
concept IndexType = std::unsigned_integral<I> || std::same_as<I, BigInt>;

namespace bits {

template <IndexType I>
bool test(const I& n, unsigned i) {
    if constexpr (std::unsigned_integral<I>) {
        return i < 64 && ((n >> i) & 1u) != 0;
    } else {
        return boost::multiprecision::bit_test(n, i);
    }
}

/// Number of binary digits of n; 0 for n = 0.
template <IndexType I>
unsigned length(const I& n) {
    if constexpr (std::unsigned_integral<I>) {
        return static_cast<unsigned>(std::bit_width(n));
    } else {
        if (n < 0) throw std::domain_error("negative index");
        return n == 0 ? 0u : static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
    }
}

template <IndexType I>
unsigned popcount(const I& n) {
    if constexpr (std::unsigned_integral<I>) {
        return static_cast<unsigned>(std::popcount(n));
    } else {
        unsigned c = 0;
        for (unsigned i = 0, len = length(n); i < len; ++i) c += test(n, i);
        return c;
    }
}

/// n mod 2^k.
template <IndexType I>
I low(const I& n, unsigned k) {
    if constexpr (std::unsigned_integral<I>) {
        return k >= 64 ? n : (n & ((I{1} << k) - 1));
    } else {
        return n & ((BigInt{1} << k) - 1);
    }
}

template <IndexType I>
I pow2(unsigned k) {
    return I{1} << k;
}

/// 2-adic valuation; undefined for 0.
template <IndexType I>
unsigned valuation(const I& n) {
    if constexpr (std::unsigned_integral<I>) {
        return static_cast<unsigned>(std::countr_zero(n));
    } else {
        return static_cast<unsigned>(boost::multiprecision::lsb(n));
    }
}

template <IndexType I>
bool is_pow2(const I& n) {
    return n != 0 && (n & (n - 1)) == 0;
}

/// Smallest k with 2^k >= n (n >= 1).
template <IndexType I>
unsigned ceil_log2(const I& n) {
    return is_pow2(n) ? length(n) - 1 : length(n);
}

}  // namespace bits

/// Reads the low 64 bits; used where a value is known to be small.
template <IndexType I>
std::uint64_t to_u64(const I& n) {
    if constexpr (std::unsigned_integral<I>) {
        return static_cast<std::uint64_t>(n);
    } else {
        return n.template convert_to<std::uint64_t>();
    }
}

}  // namespace catmod2
