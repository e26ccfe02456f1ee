#include <gtest/gtest.h>

#include "catmod2/decomposition.hpp"

using namespace catmod2;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    return m;
}

}  // namespace

TEST(Ldlt, PrintedFourByFour) {
    const IntMatrix A = from_rows({{1, 0, 0, 0}, {1, 1, 0, 0}, {0, -1, 1, 0}, {1, 1, -1, 1}});
    const IntMatrix D = from_rows({{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}});
    const IntMatrix H = from_rows({{1, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
    EXPECT_EQ(plain_lower_factor(4), A);
    EXPECT_EQ(plain_diagonal(4), D);
    EXPECT_EQ(unit_hankel(4, 0), H);
    EXPECT_EQ(A * D * A.transposed(), H);
}

TEST(Ldlt, AllSizes) {
    for (std::size_t n = 1; n <= 64; ++n) {
        EXPECT_TRUE(ldlt_verify_plain(n)) << n;
        EXPECT_TRUE(ldlt_verify_shifted(n)) << n;
    }
    EXPECT_THROW(ldlt_verify_plain(0), std::invalid_argument);
    EXPECT_THROW(ldlt_verify_shifted(0), std::invalid_argument);
}

TEST(Ldlt, FactorsAreUnitLowerTriangular) {
    for (std::size_t n = 1; n <= 32; ++n) {
        const IntMatrix a = plain_lower_factor(n), c = shifted_lower_factor(n);
        for (std::size_t i = 0; i < n; ++i) {
            EXPECT_EQ(a(i, i), 1);
            EXPECT_EQ(c(i, i), 1);
            for (std::size_t j = i + 1; j < n; ++j) {
                EXPECT_EQ(a(i, j), 0);
                EXPECT_EQ(c(i, j), 0);
            }
        }
    }
}
