#include <gtest/gtest.h>

#include <random>

#include "catmod2/decomposition.hpp"
#include "catmod2/determinant.hpp"
#include "catmod2/hankel.hpp"
#include "catmod2/orthopoly.hpp"
#include "catmod2/parity.hpp"
#include "catmod2/signs.hpp"
#include "oracles.hpp"

using namespace catmod2;
using u64 = std::uint64_t;

namespace {

std::vector<std::vector<int>> as_ints(const HankelMatrix& h) {
    std::vector<std::vector<int>> m(h.size(), std::vector<int>(h.size()));
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = 0; j < h.size(); ++j) m[i][j] = h.entry_int(i, j).convert_to<int>();
    return m;
}

}  // namespace

TEST(Matrix, UnshiftedFive) {
    const std::vector<std::vector<int>> want{
        {1, 1, 0, 1, 0}, {1, 0, 1, 0, 0}, {0, 1, 0, 0, 0}, {1, 0, 0, 0, 1}, {0, 0, 0, 1, 0}};
    const auto h = build_matrix(SequenceRule::make(RuleKind::unit), 5);
    EXPECT_EQ(as_ints(h), want);
    EXPECT_EQ(det_oracle(h), LaurentPoly(1));
}

TEST(Matrix, ShiftedFive) {
    const std::vector<std::vector<int>> want{
        {1, 0, 1, 0, 0}, {0, 1, 0, 0, 0}, {1, 0, 0, 0, 1}, {0, 0, 0, 1, 0}, {0, 0, 1, 0, 0}};
    const auto h = build_matrix(SequenceRule::make(RuleKind::unit, 1), 5);
    EXPECT_EQ(as_ints(h), want);
    EXPECT_EQ(det_oracle(h), LaurentPoly(-1));
}

TEST(Matrix, PowersFive) {
    const auto h = build_matrix(SequenceRule::make(RuleKind::powers), 5);
    const LaurentPoly x = LaurentPoly::var(0);
    EXPECT_EQ(h.entry(0, 0), LaurentPoly(1));
    EXPECT_EQ(h.entry(0, 1), x);
    EXPECT_EQ(h.entry(1, 2), x * x);
    EXPECT_EQ(h.entry(3, 4), x * x * x);
    EXPECT_EQ(h.entry(2, 2), LaurentPoly());
    EXPECT_EQ(det_oracle(h), LaurentPoly::var(0, 10));
}

TEST(Matrix, GrsSix) {
    const std::vector<std::vector<int>> want{{1, 0, 1, 0, 0, 0},  {0, 1, 0, 0, 0, -1}, {1, 0, 0, 0, -1, 0},
                                             {0, 0, 0, -1, 0, 0}, {0, 0, -1, 0, 0, 0}, {0, -1, 0, 0, 0, 0}};
    const auto h = build_matrix(SequenceRule::make(RuleKind::grs, 1), 6);
    EXPECT_EQ(as_ints(h), want);
    EXPECT_EQ(det_oracle(h), LaurentPoly(-1));
}

TEST(Matrix, EmptyAndStructure) {
    const auto h = build_matrix(SequenceRule::make(RuleKind::generic, 3), 0);
    EXPECT_EQ(h.size(), 0u);
    EXPECT_EQ(det_oracle(h), LaurentPoly(1));
    for (u64 m = 0; m < 5; ++m)
        for (std::size_t n = 1; n < 40; ++n) {
            const auto g = build_matrix(SequenceRule::make(RuleKind::generic, static_cast<unsigned>(m)), n);
            EXPECT_LE(g.antidiagonals().size(), bits::ceil_log2(2 * n + m) + 1);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    EXPECT_EQ(g.entry(i, j), g.entry(j, i));
                    if (i + 1 < n && j > 0) {
                        EXPECT_EQ(g.entry(i, j), g.entry(i + 1, j - 1));
                    }
                    EXPECT_EQ(g.entry(i, j).is_zero(), !oracle::is_pow2(i + j + m + 1));
                }
        }
}

TEST(Matrix, CustomRule) {
    const auto rule = SequenceRule::custom({{0, 2}, {1, 3}, {2, 5}});
    const auto h = build_matrix(rule, 2);
    // [[a0, a1], [a1, a2]] = [[2, 3], [3, 0]]
    EXPECT_EQ(det_oracle(h), LaurentPoly(-9));
}

TEST(Bareiss, MatchesRationalElimination) {
    for (u64 m = 0; m <= 6; ++m)
        for (std::size_t n = 0; n <= 40; ++n) {
            const auto h = build_matrix(SequenceRule::make(RuleKind::unit, static_cast<unsigned>(m)), n);
            EXPECT_EQ(Rational(det_bareiss(h)), oracle::gauss_det(oracle::unit_hankel(n, m))) << n << ' ' << m;
        }
}

TEST(Bareiss, GeneralMatrices) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> v(-4, 4);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + t % 7;
        std::vector<BigInt> a(n * n);
        std::vector<std::vector<Rational>> r(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const int x = t % 3 == 0 ? v(rng) / 3 : v(rng);
                a[i * n + j] = x;
                r[i][j] = x;
            }
        EXPECT_EQ(Rational(bareiss_determinant(a, n)), oracle::gauss_det(r));
    }
}

TEST(Cofactor, MatchesLeibniz) {
    for (u64 m = 0; m <= 4; ++m)
        for (std::size_t n = 0; n <= 7; ++n) {
            const auto h = build_matrix(SequenceRule::make(RuleKind::generic, static_cast<unsigned>(m)), n);
            EXPECT_EQ(det_cofactor(h), oracle::leibniz(oracle::symbolic_hankel(n, m))) << n << ' ' << m;
        }
}

TEST(Cofactor, AgreesWithBareissOnIntegerRules) {
    for (RuleKind k : {RuleKind::unit, RuleKind::grs})
        for (unsigned m = 1; m <= 3; ++m)
            for (std::size_t n = 0; n <= 64; ++n) {
                const auto h = build_matrix(SequenceRule::make(k, m), n);
                EXPECT_EQ(det_cofactor(h), LaurentPoly(det_bareiss(h))) << n;
            }
    for (std::size_t n = 0; n <= 64; ++n) {
        const auto h = build_matrix(SequenceRule::make(RuleKind::unit), n);
        EXPECT_EQ(det_cofactor(h), LaurentPoly(det_bareiss(h))) << n;
    }
}

TEST(Cofactor, SizeGuard) {
    EXPECT_THROW(det_cofactor(build_matrix(SequenceRule::make(RuleKind::generic), 65)), std::invalid_argument);
    EXPECT_THROW(det_bareiss(build_matrix(SequenceRule::make(RuleKind::generic), 3)), std::invalid_argument);
}

TEST(BinomParity, Values) {
    EXPECT_EQ(binom_parity(3, 1), 1);
    EXPECT_EQ(binom_parity(2, 1), 0);
    EXPECT_EQ(binom_parity(17, 0), 1);
    EXPECT_EQ(binom_parity(5, -1), 0);
    EXPECT_EQ(binom_parity(5, 6), 0);
    // Pascal's rule mod 2.
    for (u64 a = 1; a < 200; ++a)
        for (std::int64_t b = 0; b <= static_cast<std::int64_t>(a); ++b)
            EXPECT_EQ(binom_parity(a, b), (binom_parity(a - 1, b) + binom_parity(a - 1, b - 1)) % 2);
}

TEST(Orthopoly, PrintedPolynomials) {
    EXPECT_EQ(orthopoly_unit(0).str(), "1");
    EXPECT_EQ(orthopoly_unit(1).str(), "x");
    EXPECT_EQ(orthopoly_unit(2).str(), "x^2-1");
    EXPECT_EQ(orthopoly_unit(3).str(), "x^3");
    EXPECT_EQ(orthopoly_unit(4).str(), "x^4+x^2-1");
    EXPECT_EQ(orthopoly_unit(7).str(), "x^7");
}

TEST(Orthopoly, GeneralCoefficients) {
    const std::vector<BigInt> T{2, 3};
    // p2 = x^2 - 2, p3 = x p2 - 3 x = x^3 - 5x
    EXPECT_EQ(orthopoly(3, T).str(), "x^3-5*x");
    EXPECT_THROW(orthopoly(4, T), std::invalid_argument);
}

TEST(Orthopoly, Orthogonality) {
    EXPECT_EQ(moment_orthogonality(1, 2), 0);
    EXPECT_EQ(moment_orthogonality(0, 0), 1);
    for (std::size_t i = 0; i <= 20; ++i) {
        BigInt norm = 1;
        for (std::size_t k = 0; k < i; ++k) norm *= T_int<u64>(k).value();
        EXPECT_EQ(moment_orthogonality(i, i), norm) << i;
        for (std::size_t j = i + 1; j <= 20; ++j) EXPECT_EQ(moment_orthogonality(i, j), 0) << i << ' ' << j;
    }
    EXPECT_EQ(moment_orthogonality(3, 3), 1);
    EXPECT_THROW(moment_orthogonality(21, 0), std::invalid_argument);
}

TEST(Parity, Values) {
    for (u64 n = 0; n < 40; ++n) EXPECT_EQ(catalan_shift_parity(n, 2), n % 2 == 0 ? 1 : 0);
    EXPECT_EQ(catalan_shift_parity(4, 3), 1);
    EXPECT_EQ(catalan_shift_parity(2, 3), 0);
    EXPECT_THROW(catalan_shift_parity(1, 0), std::invalid_argument);
}

TEST(Parity, MatchesCatalanDeterminant) {
    for (u64 m = 1; m <= 6; ++m)
        for (u64 n = 0; n <= 10; ++n) {
            std::vector<std::vector<Rational>> c(n, std::vector<Rational>(n));
            for (u64 i = 0; i < n; ++i)
                for (u64 j = 0; j < n; ++j) c[i][j] = Rational(oracle::catalan_number(i + j + m));
            const Rational det = oracle::gauss_det(c);
            ASSERT_EQ(denominator(det), 1);
            const int parity = static_cast<int>(numerator(det) % 2 != 0);
            EXPECT_EQ(catalan_shift_parity(n, m), parity) << n << ' ' << m;
        }
}

TEST(Parity, ResidueRule) {
    for (u64 m = 1; m <= 16; ++m)
        for (u64 n = 0; n <= 256; ++n) {
            EXPECT_EQ(catalan_shift_parity(n, m) == 1, parity_residue_rule(n, m)) << n << ' ' << m;
            EXPECT_EQ(catalan_shift_parity(n, m) == 1, d_shift_int(n, m) != 0) << n << ' ' << m;
        }
}

TEST(Parity, LargeIndex) { EXPECT_EQ(catalan_shift_parity(1'000'000, 16), parity_residue_rule(1'000'000, 16)); }
