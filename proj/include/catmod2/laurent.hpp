#pragma once

// Sparse multivariate Laurent polynomials over BigInt. Variable index k
// stands for the indeterminate x_{2^k - 1}, so x0, x1, x3, x7, ... are
// indices 0, 1, 2, 3, ...
//
// Canonical text form: terms in ascending exponent-vector order, factors in
// ascending variable order, negative exponents collected after a '/':
//     -x0*x3^2*x7^2*x15^6     x3/x1     -x0^2*x3^2/x1^4     1-x0^2

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace catmod2 {

/// How variable indices are printed and parsed.
enum class VarNaming {
    indexed,  // index k prints as x{2^k - 1}
    single,   // only index 0 is allowed and prints as plain x
};

/// Finite map k -> nonzero exponent, kept sorted by k.
class ExponentVector {
   public:
    using Entry = std::pair<unsigned, std::int64_t>;

    ExponentVector() = default;

    static ExponentVector var(unsigned k, std::int64_t e = 1) {
        ExponentVector v;
        v.set(k, e);
        return v;
    }

    std::int64_t get(unsigned k) const {
        auto it = find(k);
        return it != entries_.end() && it->first == k ? it->second : 0;
    }

    void set(unsigned k, std::int64_t e) {
        auto it = find(k);
        if (it != entries_.end() && it->first == k) {
            if (e == 0) entries_.erase(it);
            else it->second = e;
        } else if (e != 0) {
            entries_.insert(it, {k, e});
        }
    }

    void add(unsigned k, std::int64_t e) { set(k, get(k) + e); }

    bool empty() const noexcept { return entries_.empty(); }
    const std::vector<Entry>& entries() const noexcept { return entries_; }

    ExponentVector operator*(const ExponentVector& o) const {
        ExponentVector r;
        r.entries_.reserve(entries_.size() + o.entries_.size());
        auto a = entries_.begin(), b = o.entries_.begin();
        while (a != entries_.end() || b != o.entries_.end()) {
            if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first)) {
                r.entries_.push_back(*a++);
            } else if (a == entries_.end() || b->first < a->first) {
                r.entries_.push_back(*b++);
            } else {
                if (auto e = a->second + b->second; e != 0) r.entries_.push_back({a->first, e});
                ++a;
                ++b;
            }
        }
        return r;
    }

    ExponentVector scaled(std::int64_t f) const {
        if (f == 0) return {};
        ExponentVector r = *this;
        for (auto& [k, e] : r.entries_) e *= f;
        return r;
    }

    ExponentVector inverse() const { return scaled(-1); }

    bool has_negative() const {
        return std::any_of(entries_.begin(), entries_.end(), [](const Entry& x) { return x.second < 0; });
    }

    auto operator<=>(const ExponentVector&) const = default;
    bool operator==(const ExponentVector&) const = default;

   private:
    std::vector<Entry>::iterator find(unsigned k) {
        return std::lower_bound(entries_.begin(), entries_.end(), k,
                                [](const Entry& x, unsigned key) { return x.first < key; });
    }
    std::vector<Entry>::const_iterator find(unsigned k) const {
        return std::lower_bound(entries_.begin(), entries_.end(), k,
                                [](const Entry& x, unsigned key) { return x.first < key; });
    }

    std::vector<Entry> entries_;
};

class LaurentPoly {
   public:
    using Terms = std::map<ExponentVector, BigInt>;

    LaurentPoly() = default;
    LaurentPoly(long long c) { add_term({}, BigInt(c)); }  // NOLINT: implicit from integers
    LaurentPoly(const BigInt& c) { add_term({}, c); }      // NOLINT

    static LaurentPoly monomial(const BigInt& c, ExponentVector e) {
        LaurentPoly p;
        p.add_term(std::move(e), c);
        return p;
    }

    /// The indeterminate x_{2^k - 1}.
    static LaurentPoly var(unsigned k, std::int64_t e = 1) { return monomial(1, ExponentVector::var(k, e)); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    /// Constant value; throws unless is_constant().
    BigInt constant() const {
        if (!is_constant()) throw std::domain_error("LaurentPoly::constant: not a constant");
        return terms_.empty() ? BigInt(0) : terms_.begin()->second;
    }

    /// Coefficient and exponents of a single-term value.
    std::pair<BigInt, ExponentVector> as_monomial() const {
        if (!is_monomial()) throw std::domain_error("LaurentPoly::as_monomial: not a single term");
        return {terms_.begin()->second, terms_.begin()->first};
    }

    void add_term(ExponentVector e, const BigInt& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, BigInt(-c));
        return *this;
    }
    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea * eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    /// Exact division by a single-term value whose coefficient divides every
    /// coefficient of *this.
    friend LaurentPoly operator/(const LaurentPoly& a, const LaurentPoly& b) {
        auto [cb, eb] = b.as_monomial();
        const ExponentVector inv = eb.inverse();
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_) {
            if (ca % cb != 0) throw std::domain_error("LaurentPoly: inexact division");
            r.add_term(ea * inv, ca / cb);
        }
        return r;
    }

    /// Integer power; negative exponents need a unit single-term base.
    LaurentPoly pow(std::int64_t e) const {
        if (e < 0) {
            auto [c, ev] = as_monomial();
            if (c != 1 && c != -1) throw std::domain_error("LaurentPoly::pow: non-unit coefficient");
            return monomial(((-e) % 2 == 1) ? c : BigInt(1), ev.scaled(e));
        }
        if (is_monomial()) {
            auto [c, ev] = as_monomial();
            return monomial(boost::multiprecision::pow(c, static_cast<unsigned>(e)), ev.scaled(e));
        }
        LaurentPoly result = 1, base = *this;
        for (auto k = e; k > 0; k >>= 1) {
            if (k & 1) result *= base;
            if (k > 1) base *= base;
        }
        return result;
    }

    /// Replaces each variable by a value; values raised to negative powers
    /// must be unit single-term values.
    LaurentPoly substitute(const std::function<LaurentPoly(unsigned)>& value) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) {
            LaurentPoly t = c;
            for (const auto& [k, x] : e.entries()) t *= value(k).pow(x);
            r += t;
        }
        return r;
    }

    /// Exact value under an assignment k -> rational.
    Rational eval(const std::map<unsigned, Rational>& assignment) const {
        Rational sum = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = Rational(c);
            for (const auto& [k, x] : e.entries()) {
                auto it = assignment.find(k);
                if (it == assignment.end())
                    throw std::invalid_argument("LaurentPoly::eval: variable x" + std::to_string(k) + " unassigned");
                if (it->second == 0 && x < 0) throw std::domain_error("LaurentPoly::eval: division by zero");
                Rational f = 1;
                for (std::int64_t i = 0; i < (x < 0 ? -x : x); ++i) f *= it->second;
                t = x < 0 ? Rational(t / f) : Rational(t * f);
            }
            sum += t;
        }
        return sum;
    }

    bool operator==(const LaurentPoly&) const = default;

    std::string str(VarNaming naming = VarNaming::indexed) const;
    static LaurentPoly parse(std::string_view text, VarNaming naming = VarNaming::indexed);

   private:
    Terms terms_;
};

namespace detail {

inline std::string var_name(unsigned k, VarNaming naming) {
    if (naming == VarNaming::single) {
        if (k != 0) throw std::domain_error("single-variable naming used with index " + std::to_string(k));
        return "x";
    }
    if (k >= 64) throw std::domain_error("variable index too large to print");
    return "x" + std::to_string((std::uint64_t{1} << k) - 1);
}

inline std::string factors(const std::vector<std::pair<unsigned, std::int64_t>>& fs, VarNaming naming) {
    std::string s;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) s += '*';
        s += var_name(fs[i].first, naming);
        if (fs[i].second != 1) s += '^' + std::to_string(fs[i].second);
    }
    return s;
}

inline std::string term_str(const BigInt& coeff, const ExponentVector& e, VarNaming naming) {
    std::vector<std::pair<unsigned, std::int64_t>> num, den;
    for (const auto& [k, x] : e.entries()) (x > 0 ? num : den).push_back({k, x > 0 ? x : -x});
    const BigInt mag = coeff < 0 ? BigInt(-coeff) : coeff;
    std::string s;
    if (mag != 1 || num.empty()) s = mag.str();
    if (!num.empty()) {
        if (!s.empty()) s += '*';
        s += factors(num, naming);
    }
    if (!den.empty()) s += '/' + (den.size() == 1 ? factors(den, naming) : '(' + factors(den, naming) + ')');
    return s;
}

class Parser {
   public:
    Parser(std::string_view text, VarNaming naming) : naming_(naming) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
    }

    LaurentPoly poly() {
        if (s_.empty()) fail("empty input");
        LaurentPoly p;
        bool first = true;
        while (pos_ < s_.size()) {
            bool neg = false;
            if (peek() == '+' || peek() == '-') {
                neg = get() == '-';
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            LaurentPoly t = term();
            p += neg ? -t : t;
            first = false;
        }
        return p;
    }

   private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("LaurentPoly::parse: " + why + " at offset " + std::to_string(pos_) + " in '" +
                                    s_ + "'");
    }

    BigInt number() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return BigInt(s_.substr(start, pos_ - start));
    }

    ExponentVector factor() {
        if (get() != 'x') fail("expected variable");
        unsigned k = 0;
        if (naming_ == VarNaming::indexed) {
            BigInt sub = number();
            BigInt sub1 = sub + 1;
            if (!bits::is_pow2(sub1)) fail("subscript is not of the form 2^k-1");
            k = bits::length(sub1) - 1;
        }
        std::int64_t e = 1;
        if (peek() == '^') {
            ++pos_;
            bool neg = false;
            if (peek() == '-') {
                neg = true;
                ++pos_;
            }
            e = number().convert_to<std::int64_t>();
            if (neg) e = -e;
        }
        return ExponentVector::var(k, e);
    }

    ExponentVector product() {
        ExponentVector e = factor();
        while (peek() == '*') {
            ++pos_;
            e = e * factor();
        }
        return e;
    }

    LaurentPoly term() {
        BigInt c = 1;
        ExponentVector e;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = number();
            if (peek() == '*') {
                ++pos_;
                e = product();
            }
        } else {
            e = product();
        }
        if (peek() == '/') {
            ++pos_;
            if (peek() == '(') {
                ++pos_;
                e = e * product().inverse();
                if (get() != ')') fail("expected ')'");
            } else {
                e = e * factor().inverse();
            }
        }
        return LaurentPoly::monomial(c, e);
    }

    std::string s_;
    std::size_t pos_ = 0;
    VarNaming naming_;
};

}  // namespace detail

inline std::string LaurentPoly::str(VarNaming naming) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (c < 0) s += '-';
        else if (!first) s += '+';
        s += detail::term_str(c, e, naming);
        first = false;
    }
    return s;
}

inline LaurentPoly LaurentPoly::parse(std::string_view text, VarNaming naming) {
    return detail::Parser(text, naming).poly();
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

inline LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

inline Rational poly_eval(const LaurentPoly& p, const std::map<unsigned, Rational>& assignment) {
    return p.eval(assignment);
}

}  // namespace catmod2
