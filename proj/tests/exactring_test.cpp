#include <gtest/gtest.h>

#include <random>

#include "catmod2/laurent.hpp"
#include "catmod2/series.hpp"
#include "catmod2/unipoly.hpp"

using namespace catmod2;

namespace {

LaurentPoly x(unsigned k, std::int64_t e = 1) { return LaurentPoly::var(k, e); }

LaurentPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> terms(0, 4), var(0, 3), exp(-3, 3), coef(-5, 5);
    LaurentPoly p;
    for (int t = terms(rng); t > 0; --t) {
        ExponentVector e;
        for (int v = 0; v < 3; ++v) e.add(static_cast<unsigned>(var(rng)), exp(rng));
        p.add_term(e, coef(rng));
    }
    return p;
}

}  // namespace

TEST(Laurent, Multiplication) {
    EXPECT_EQ(poly_mul(x(1), x(1)), x(1, 2));
    EXPECT_EQ(poly_mul(x(2) * x(1, -1), x(1, 2)), x(1) * x(2));
    EXPECT_EQ(poly_mul(LaurentPoly(1) + x(0), LaurentPoly(1) - x(0)), LaurentPoly(1) - x(0, 2));
}

TEST(Laurent, MonomialTimesMonomialIsMonomial) {
    const LaurentPoly p = -x(0) * x(2, 2), q = LaurentPoly(3) * x(2, -5) * x(4);
    EXPECT_TRUE((p * q).is_monomial());
}

TEST(Laurent, CanonicalForm) {
    LaurentPoly p = x(1) - x(1);
    EXPECT_TRUE(p.is_zero());
    EXPECT_EQ(p.str(), "0");
    EXPECT_EQ(x(3, 0), LaurentPoly(1));
}

TEST(Laurent, Rendering) {
    const LaurentPoly d11 = -x(0) * x(2, 2) * x(3, 2) * x(4, 6);
    EXPECT_EQ(d11.str(), "-x0*x3^2*x7^2*x15^6");
    EXPECT_EQ((x(2) / x(1)).str(), "x3/x1");
    EXPECT_EQ((-x(1) * x(3) / x(2, 2)).str(), "-x1*x7/x3^2");
    EXPECT_EQ((-x(0, 2) * x(2, 2) / x(1, 4)).str(), "-x0^2*x3^2/x1^4");
    EXPECT_EQ((LaurentPoly(1) / (x(0) * x(1))).str(), "1/(x0*x1)");
    EXPECT_EQ(x(0, 10).str(VarNaming::single), "x^10");
    EXPECT_EQ(LaurentPoly(-7).str(), "-7");
}

TEST(Laurent, ParseRoundTrip) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        const LaurentPoly p = random_poly(rng);
        EXPECT_EQ(LaurentPoly::parse(p.str()), p) << p.str();
    }
    for (const char* s : {"x3/x1", "-x1*x7/x3^2", "1/(x0*x1)", "-x0*x3^2*x7^2*x15^6", "2*x1^-3", "0", "-1"})
        EXPECT_EQ(LaurentPoly::parse(s).str(), LaurentPoly::parse(LaurentPoly::parse(s).str()).str()) << s;
    EXPECT_EQ(LaurentPoly::parse("x^12", VarNaming::single), x(0, 12));
}

TEST(Laurent, ParseRejectsBadInput) {
    EXPECT_THROW(LaurentPoly::parse("x2"), std::invalid_argument);
    EXPECT_THROW(LaurentPoly::parse("x1*"), std::invalid_argument);
    EXPECT_THROW(LaurentPoly::parse(""), std::invalid_argument);
    EXPECT_THROW(LaurentPoly::parse("y"), std::invalid_argument);
}

TEST(Laurent, RingLaws) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a - a, LaurentPoly());
    }
}

TEST(Laurent, EvalIsHomomorphism) {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> val(1, 9);
    for (int i = 0; i < 200; ++i) {
        const LaurentPoly a = random_poly(rng), b = random_poly(rng);
        std::map<unsigned, Rational> at;
        for (unsigned k = 0; k < 4; ++k) at[k] = Rational(val(rng) * (k % 2 ? -1 : 1), val(rng));
        EXPECT_EQ(poly_eval(a * b, at), poly_eval(a, at) * poly_eval(b, at));
        EXPECT_EQ(poly_eval(a + b, at), poly_eval(a, at) + poly_eval(b, at));
    }
}

TEST(Laurent, EvalValues) {
    std::map<unsigned, Rational> ones{{0, 1}, {1, 1}, {2, 1}, {3, 1}};
    EXPECT_EQ(poly_eval(x(0) * x(2, 2) * x(3, 2), ones), 1);
    EXPECT_EQ(poly_eval(x(1), {{1, -3}}), -3);
    EXPECT_EQ(poly_eval(x(2) / x(1), {{2, 4}, {1, 2}}), 2);
}

TEST(Laurent, EvalErrors) {
    EXPECT_THROW(poly_eval(x(2) / x(1), {{2, 4}, {1, 0}}), std::domain_error);
    EXPECT_THROW(poly_eval(x(2), {{1, 1}}), std::invalid_argument);
}

TEST(Laurent, ExactDivisionAndPowers) {
    EXPECT_EQ((x(1, 3) * x(2)) / x(1, 2), x(1) * x(2));
    EXPECT_EQ((-x(1)).pow(-2), x(1, -2));
    EXPECT_EQ((x(1) + x(2)).pow(2), x(1, 2) + LaurentPoly(2) * x(1) * x(2) + x(2, 2));
    EXPECT_THROW((LaurentPoly(1) + x(1)).pow(-1), std::domain_error);
    EXPECT_THROW(x(1) / LaurentPoly(), std::domain_error);
}

TEST(Laurent, Substitute) {
    const LaurentPoly p = -x(1, 2) * x(2, -1);
    const LaurentPoly q = p.substitute([](unsigned k) { return LaurentPoly::var(0, k); });
    EXPECT_EQ(q, -LaurentPoly::var(0, 0));
}

TEST(UniPoly, Arithmetic) {
    const UniPoly p{-1, 0, 1};  // x^2 - 1
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p.str(), "x^2-1");
    EXPECT_EQ((p * p).str(), "x^4-2*x^2+1");
    EXPECT_EQ((p - p).degree(), -1);
    EXPECT_EQ(UniPoly{}.str(), "0");
}

TEST(Series, Inverse) {
    EXPECT_EQ(series_inverse(TruncatedSeries(4, {1, -1})), TruncatedSeries(4, {1, 1, 1, 1}));
    EXPECT_EQ(series_inverse(TruncatedSeries::constant(3, 1)), TruncatedSeries::constant(3, 1));
    EXPECT_EQ(series_inverse(TruncatedSeries(3, {1, 1})), TruncatedSeries(3, {1, -1, 1}));
    EXPECT_THROW(series_inverse(TruncatedSeries(3, {0, 1})), std::domain_error);
    EXPECT_THROW(TruncatedSeries(0), std::invalid_argument);
}

TEST(Series, InverseProperty) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> c(-6, 6);
    for (int i = 0; i < 100; ++i) {
        std::vector<Rational> coeffs;
        for (int j = 0; j < 12; ++j) coeffs.emplace_back(c(rng), 1 + (j % 3));
        if (coeffs[0] == 0) coeffs[0] = 2;
        const TruncatedSeries s(12, coeffs);
        EXPECT_EQ(s * series_inverse(s), TruncatedSeries::constant(12, 1));
    }
}

TEST(Series, OrderIsMinimum) {
    const TruncatedSeries a(5, {1, 2, 3}), b(3, {1, 1, 1});
    EXPECT_EQ((a + b).order(), 3u);
    EXPECT_EQ((a * b).order(), 3u);
}
