#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "bigint.hpp"

namespace catmod2 {

/// Dense univariate polynomial over BigInt, constant term first, trimmed.
class UniPoly {
   public:
    UniPoly() = default;
    UniPoly(std::initializer_list<long long> coeffs) : c_(coeffs.begin(), coeffs.end()) { trim(); }
    explicit UniPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly x() { return UniPoly{0, 1}; }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const noexcept { return c_; }
    BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.c_.empty() || b.c_.empty()) return {};
        std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const BigInt& s, const UniPoly& p) {
        std::vector<BigInt> r = p.c_;
        for (auto& x : r) x *= s;
        return UniPoly(std::move(r));
    }

    bool operator==(const UniPoly&) const = default;

    /// e.g. "x^4+x^2-1".
    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const BigInt& c = c_[i];
            if (c == 0) continue;
            const BigInt mag = c < 0 ? BigInt(-c) : c;
            s += c < 0 ? "-" : (s.empty() ? "" : "+");
            if (mag != 1 || i == 0) s += mag.str();
            if (i > 0) {
                if (mag != 1) s += '*';
                s += 'x';
                if (i > 1) s += '^' + std::to_string(i);
            }
        }
        return s;
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

}  // namespace catmod2
