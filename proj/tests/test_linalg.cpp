#include <gtest/gtest.h>

#include "strata/linalg.hpp"
#include "support.hpp"

using namespace strata;

TEST(Linalg, DeterminantMatchesLeibniz) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 1 + t % 5;
    Matrix m = oracle::random_matrix(n, n, rng, t % 4);
    EXPECT_EQ(determinant(m), oracle::leibniz_det(m));
  }
}

TEST(Linalg, RankNullity) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 80; ++t) {
    std::size_t r = 1 + t % 6, c = 1 + (t / 6) % 6;
    Matrix m = oracle::random_matrix(r, c, rng, 3 + t % 6);
    Matrix k = nullspace(m);
    EXPECT_EQ(rank(m) + k.cols(), c);
    EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(rank(k), k.cols());
  }
}

TEST(Linalg, RrefIsIdempotentAndPreservesRowSpace) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 40; ++t) {
    Matrix m = oracle::random_matrix(4, 5, rng, 5);
    Echelon e = rref(m);
    EXPECT_EQ(rref(e.reduced).reduced, e.reduced);
    EXPECT_EQ(rank(vstack(m, e.reduced)), rank(m));
    EXPECT_EQ(e.pivots.size(), rank(m));
  }
}

TEST(Linalg, SolveAndInverse) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 40; ++t) {
    Matrix a = oracle::random_matrix(4, 4, rng);
    Matrix x = oracle::random_matrix(4, 2, rng);
    auto sol = solve(a, a * x);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(a * *sol, a * x);
    auto inv = inverse(a);
    if (determinant(a) == 0) {
      EXPECT_FALSE(inv.has_value());
    } else {
      ASSERT_TRUE(inv.has_value());
      EXPECT_EQ(a * *inv, Matrix::identity(4));
    }
  }
  Matrix singular = Matrix::from_rows({{1, 2}, {2, 4}});
  EXPECT_FALSE(solve(singular, Matrix::from_rows({{1}, {0}})).has_value());
}

TEST(Linalg, SubspaceLattice) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 40; ++t) {
    Matrix a = column_basis(oracle::random_matrix(6, 2 + t % 3, rng, 4));
    Matrix b = column_basis(oracle::random_matrix(6, 2 + t % 4, rng, 4));
    Matrix s = subspace_sum(a, b), i = subspace_intersection(a, b);
    EXPECT_EQ(s.cols() + i.cols(), a.cols() + b.cols());
    EXPECT_TRUE(subspace_contains(s, a));
    EXPECT_TRUE(subspace_contains(a, i));
    EXPECT_TRUE(subspace_contains(b, i));
    Matrix c = complement_basis(a, 6);
    EXPECT_EQ(rank(hstack(a, c)), 6u);
    if (a.cols() > 0) EXPECT_EQ(left_inverse(a) * a, Matrix::identity(a.cols()));
  }
}

TEST(Linalg, EmptyShapes) {
  Matrix e(0, 3);
  EXPECT_EQ(rank(e), 0u);
  EXPECT_EQ(nullspace(e).cols(), 3u);
  EXPECT_EQ(determinant(Matrix(0, 0)), 1);
  EXPECT_EQ((Matrix(2, 0) * Matrix(0, 3)), Matrix(2, 3));
}

TEST(Linalg, ShapeMismatchThrows) {
  EXPECT_THROW(Matrix(2, 3) * Matrix(2, 3), std::invalid_argument);
  EXPECT_THROW(Matrix(2, 3) + Matrix(3, 2), std::invalid_argument);
  EXPECT_THROW(determinant(Matrix(2, 3)), std::invalid_argument);
}
