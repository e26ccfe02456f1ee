#include <gtest/gtest.h>

#include <random>

#include "catmod2/contfrac.hpp"
#include "oracles.hpp"

using namespace catmod2;

TEST(Expand, CatalanFraction) {
    const auto cat = oracle::catalan(12);
    const TruncatedSeries f = cf_expand(CFSpec::s_fraction(std::vector<Rational>(12, 1)), 12);
    for (std::size_t i = 0; i < 12; ++i) EXPECT_EQ(f[i], Rational(cat[i])) << i;
    EXPECT_EQ(f.str().substr(0, 11), "1,1,2,5,14,");
}

TEST(Expand, DepthGuard) {
    EXPECT_THROW(cf_expand(CFSpec::s_fraction(std::vector<Rational>(4, 1)), 5), InsufficientDepth);
    EXPECT_THROW(cf_expand(CFSpec::j_fraction({1, 1}, {1, 1}), 5), InsufficientDepth);
    EXPECT_NO_THROW(cf_expand(CFSpec::j_fraction({1, 1}, {1, 1}), 4));
    EXPECT_THROW(cf_expand(CFSpec::s_fraction({}), 1), InsufficientDepth);
    EXPECT_THROW(CFSpec::j_fraction({1}, {}), std::invalid_argument);
}

TEST(Expand, JFractionMotzkin) {
    // s_n = 1, t_n = 1 gives the Motzkin numbers.
    const std::vector<int> motzkin{1, 1, 2, 4, 9, 21, 51, 127};
    const auto f = cf_expand(CFSpec::j_fraction(std::vector<Rational>(4, 1), std::vector<Rational>(4, 1)), 8);
    for (std::size_t i = 0; i < motzkin.size(); ++i) EXPECT_EQ(f[i], motzkin[i]);
}

TEST(Expand, DepthSufficiency) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t N = 4 + trial % 20;
        std::vector<Rational> c, s, t;
        for (std::size_t i = 0; i <= N + 1; ++i) {
            c.emplace_back(rng() % 2 ? 1 : -1);
            s.emplace_back(static_cast<int>(rng() % 5) - 2);
            t.emplace_back(rng() % 2 ? 1 : -1);
        }
        auto prefix = [](std::vector<Rational> v, std::size_t d) { return std::vector<Rational>(v.begin(), v.begin() + d); };
        EXPECT_EQ(cf_expand(CFSpec::s_fraction(prefix(c, N)), N), cf_expand(CFSpec::s_fraction(prefix(c, N + 1)), N));
        const std::size_t D = (N + 1) / 2;
        EXPECT_EQ(cf_expand(CFSpec::j_fraction(prefix(s, D), prefix(t, D)), N),
                  cf_expand(CFSpec::j_fraction(prefix(s, D + 1), prefix(t, D + 1)), N));
    }
}

TEST(Target, Values) {
    EXPECT_EQ(target_series(8, false), TruncatedSeries(8, {1, 1, 0, 1, 0, 0, 0, 1}));
    EXPECT_EQ(target_series(8, true), TruncatedSeries(8, {1, -1, 0, 1, 0, 0, 0, -1}));
    EXPECT_EQ(target_series(1, false), TruncatedSeries::constant(1, 1));
    EXPECT_THROW(target_series(0, false), std::invalid_argument);
}

TEST(Identities, AllOrders) {
    for (std::size_t N : {1, 2, 7, 33, 64, 128})
        for (CFIdentity id : {CFIdentity::sfraction_T, CFIdentity::jfraction_favard, CFIdentity::sfraction_grs})
            EXPECT_TRUE(verify_identity(id, N)) << identity_name(id) << ' ' << N;
    EXPECT_THROW(verify_identity(CFIdentity::sfraction_T, 129), std::invalid_argument);
    EXPECT_THROW(verify_identity(CFIdentity::sfraction_T, 0), std::invalid_argument);
}

TEST(Identities, ExplicitJFractionLevels) {
    // 1/(1 - z + z^2/(1 + 2z + z^2/(1 + z^2/...)))
    const CFSpec j = favard_jfraction(3);
    EXPECT_EQ(j.s, (std::vector<Rational>{1, -2, 0}));
    EXPECT_EQ(j.t, (std::vector<Rational>{-1, -1, -1}));
}

TEST(Identities, AlternatingDisplay) {
    // The levels of the alternating fraction start +z, -z, +z, -z.
    const CFSpec g = grs_sfraction(4);
    EXPECT_EQ(g.c, (std::vector<Rational>{-1, 1, -1, 1}));
    for (std::uint64_t n = 0; n < 4; ++n) EXPECT_EQ((seq::grs_r(n) * seq::grs_r(n + 2)).value(), n % 2 ? -1 : 1);
    // The strictly alternating pattern and the r(n) r(n+2) pattern agree on
    // the first four levels, hence on the series up to z^3.
    std::vector<Rational> alternating;
    for (int n = 0; n < 4; ++n) alternating.emplace_back(n % 2 ? 1 : -1);
    EXPECT_EQ(cf_expand(CFSpec::s_fraction(alternating), 4), target_series(4, true));
}

TEST(Identities, WrongCoefficientsFail) {
    auto spec = t_sfraction(32);
    spec.c[5] = -spec.c[5];
    EXPECT_NE(cf_expand(spec, 32), target_series(32, false));
}
