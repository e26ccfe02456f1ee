#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"

namespace catmod2 {

/// sum c_i z^i mod z^N over exact rationals.
class TruncatedSeries {
   public:
    explicit TruncatedSeries(std::size_t order) : c_(order) {
        if (order == 0) throw std::invalid_argument("TruncatedSeries: order must be positive");
    }
    TruncatedSeries(std::size_t order, std::vector<Rational> coeffs) : TruncatedSeries(order) {
        for (std::size_t i = 0; i < std::min(order, coeffs.size()); ++i) c_[i] = std::move(coeffs[i]);
    }

    static TruncatedSeries constant(std::size_t order, const Rational& v) {
        TruncatedSeries s(order);
        s.c_[0] = v;
        return s;
    }

    std::size_t order() const noexcept { return c_.size(); }
    const Rational& operator[](std::size_t i) const { return c_.at(i); }
    Rational& operator[](std::size_t i) { return c_.at(i); }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < r.order(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < r.order(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < r.order(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; i + j < r.order(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    /// Multiplies by c * z^shift.
    TruncatedSeries shifted(const Rational& c, std::size_t shift) const {
        TruncatedSeries r(order());
        if (c == 0) return r;
        for (std::size_t i = 0; i + shift < order(); ++i) r.c_[i + shift] = c * c_[i];
        return r;
    }

    bool operator==(const TruncatedSeries&) const = default;

    /// Comma-separated coefficients.
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ',';
            s += c_[i].str();
        }
        return s;
    }

   private:
    std::vector<Rational> c_;
};

/// t with s * t = 1 mod z^N.
inline TruncatedSeries series_inverse(const TruncatedSeries& s) {
    if (s[0] == 0) throw std::domain_error("series_inverse: constant coefficient is zero");
    const std::size_t n = s.order();
    TruncatedSeries t(n);
    const Rational inv0 = Rational(1) / s[0];
    t[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j)
            if (s[j] != 0) acc += s[j] * t[k - j];
        t[k] = -acc * inv0;
    }
    return t;
}

}  // namespace catmod2
