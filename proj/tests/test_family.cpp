#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace gtpoly;
using namespace gtpoly::test;

TEST(Family, SpecShape) {
    EXPECT_EQ(family_spec(2), PolytopeSpec({2, 2, 1, 0, 0}, {1, 1, 1, 1, 1}));
    EXPECT_EQ(family_spec(3), PolytopeSpec({3, 3, 3, 2, 0, 0, 0}, {2, 2, 2, 2, 1, 1, 1}));
}

TEST(Family, KTwoPattern) {
    const auto f = counterexample(2);
    EXPECT_EQ(f.spec.n(), 5);
    EXPECT_EQ(f.pattern,
              P({{"1"}, {"3/2", "1/2"}, {"3/2", "3/2", "0"}, {"2", "3/2", "1/2", "0"}, {"2", "2", "1", "0", "0"}}));
    EXPECT_EQ(f.matrix, IntegerMatrix::from_rows({{1, 1, 0}, {2, 0, 0}, {1, 0, 1}}));
    EXPECT_EQ(abs_of(f.determinant), 2);
    EXPECT_TRUE(all_passed(f.transcript));
}

TEST(Family, KThree) {
    const auto f = counterexample(3);
    EXPECT_EQ(f.spec.n(), 7);
    EXPECT_EQ(abs_of(f.determinant), 3);
    EXPECT_EQ(denominator_lcm(f.pattern), 3);
    bool has_third = false;
    for (const auto &e : f.pattern.entries())
        has_third = has_third || e.get_den() == 3;
    EXPECT_TRUE(has_third);
}

TEST(Family, DiagonalUsesCorrectedFactor) {
    for (int k = 2; k <= 6; ++k) {
        const auto x = family_pattern(k);
        EXPECT_EQ(x.at(1, 1), k - 1);
        for (int j = 1; j <= k + 1; ++j)
            EXPECT_EQ(x.at(j, j), make_rational((k - j + 1) * (k - 1), k));
    }
}

TEST(Family, RejectsSmallK) {
    EXPECT_THROW(counterexample(1), validation_error);
    EXPECT_THROW(counterexample(0), validation_error);
    EXPECT_THROW(counterexample_even_n(1), validation_error);
}

TEST(Family, EvenNEmbedding) {
    for (int k = 2; k <= 3; ++k) {
        const auto f = counterexample_even_n(k);
        EXPECT_EQ(f.pattern.n(), 2 * k + 2);
        EXPECT_TRUE(membership(f.pattern, f.spec));
        EXPECT_TRUE(is_vertex(f.pattern, f.spec));
        EXPECT_FALSE(is_integral(f.pattern));
        EXPECT_EQ(denominator_lcm(f.pattern), k);
        EXPECT_EQ(denominator_lcm(counterexample(k).pattern), k);
    }
}

TEST(Bound, Values) {
    EXPECT_EQ(denominator_bound(5), 262144);
    EXPECT_EQ(denominator_bound(3), 4);
    EXPECT_EQ(denominator_bound(2), 1);
    EXPECT_EQ(denominator_bound(4), 243);
    EXPECT_THROW(denominator_bound(1), validation_error);
}

TEST(Bound, LargeNIsExact) {
    // 9^44 does not fit in 64 bits.
    EXPECT_EQ(denominator_bound(10), pow_of(Integer(9), 44));
    EXPECT_FALSE(fits_int64(denominator_bound(10)));
}

TEST(FamilyProperty, AllClaimsHoldForKUpToSix) {
    for (int k = 2; k <= 6; ++k) {
        const auto f = counterexample(k);
        EXPECT_TRUE(membership(f.pattern, f.spec));
        EXPECT_TRUE(is_vertex(f.pattern, f.spec));
        EXPECT_EQ(abs_of(f.determinant), k);
        EXPECT_EQ(denominator_lcm(f.pattern), k);
        EXPECT_LT(Integer(k), denominator_bound(2 * k + 1));
        EXPECT_TRUE(has_family_matrix_shape(f.matrix, k));
        // Independent check of the determinant on the produced matrix.
        if (k <= 5) {
            EXPECT_EQ(Rational(f.determinant), cofactor_determinant(rational_rows(f.matrix)));
        }
        const auto cert = nonintegrality_certificate(f.pattern, f.spec);
        ASSERT_TRUE(cert.has_value());
        EXPECT_EQ(cert->q, k);
    }
}

TEST(FamilyProperty, MatrixShapePredicate) {
    EXPECT_TRUE(has_family_matrix_shape(IntegerMatrix::from_rows({{1, 1, 0}, {2, 0, 0}, {1, 0, 1}}), 2));
    EXPECT_FALSE(has_family_matrix_shape(IntegerMatrix::from_rows({{1, 1, 0}, {2, 0, 1}, {1, 0, 0}}), 2));
    EXPECT_FALSE(has_family_matrix_shape(IntegerMatrix::identity(3), 2));
}
