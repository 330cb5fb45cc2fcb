#include <gtest/gtest.h>

#include "generators.hpp"
#include "ldlab/error.hpp"
#include "ldlab/matrix.hpp"
#include "ldlab/rational.hpp"
#include "oracles.hpp"

using namespace ldlab;

TEST(Rational, NormalizesAndCompares) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) * Rational(2, 3), Rational(1, 3));
  EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(7, 2).ceil(), 4);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("3/8"), Rational(3, 8));
  EXPECT_EQ(Rational::parse("5"), Rational(5));
  EXPECT_EQ(Rational::parse("0.25"), Rational(1, 4));
  EXPECT_EQ(Rational(3, 8).str(), "3/8");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_THROW(Rational::parse("x/2"), Error);
  EXPECT_THROW(Rational(1, 0), Error);
}

TEST(Rational, CountHelpersAtBoundaries) {
  EXPECT_EQ(max_count_at_most(Rational(3)), 3);
  EXPECT_EQ(max_count_below(Rational(3)), 2);
  EXPECT_EQ(max_count_at_most(Rational(7, 2)), 3);
  EXPECT_EQ(max_count_below(Rational(7, 2)), 3);
}

TEST(Matrix, RankMatchesIndependentEliminationProperty) {
  Rng rng(3);
  for (int i = 0; i < gen::kCases; ++i) {
    const FieldPtr f = gen::small_field(rng);
    const Matrix m = gen::matrix(*f, 1 + uniform_below(rng, 5), 1 + uniform_below(rng, 5), rng);
    EXPECT_EQ(rank(*f, m), oracle::rank(*f, m));
    EXPECT_EQ(rank(*f, m), rank(*f, transpose(m)));
  }
}

TEST(Matrix, SolveLeftFindsPreimageProperty) {
  Rng rng(4);
  for (int i = 0; i < gen::kCases; ++i) {
    const FieldPtr f = gen::small_field(rng);
    const Matrix a = gen::matrix(*f, 3, 5, rng);
    const Word x = gen::vec(*f, 3, rng);
    const Word b = vec_mul(*f, x, a);
    const LinearSolution sol = solve_left(*f, a, b);
    ASSERT_TRUE(sol.consistent);
    EXPECT_EQ(vec_mul(*f, sol.particular, a), b);
    EXPECT_EQ(sol.nullity, 3 - rank(*f, a));
  }
}

TEST(Matrix, KroneckerShape) {
  const FieldPtr f = make_field(3);
  Matrix a(1, 2), b(2, 1);
  a(0, 0) = 1;
  a(0, 1) = 2;
  b(0, 0) = 2;
  b(1, 0) = 1;
  const Matrix k = kronecker(*f, a, b);
  ASSERT_EQ(k.rows(), 2u);
  ASSERT_EQ(k.cols(), 2u);
  EXPECT_EQ(k(0, 0), 2);
  EXPECT_EQ(k(1, 0), 1);
  EXPECT_EQ(k(0, 1), 1);  // 2 * 2 = 4 = 1 mod 3
  EXPECT_EQ(k(1, 1), 2);
}
