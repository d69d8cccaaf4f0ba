#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace cyclo3;

TEST(Matrix, DeterminantAndAdjugate) {
  const IntMatrix A{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  EXPECT_EQ(determinant(A), BigInt(18));
  EXPECT_EQ(A * adjugate(A), BigInt(18) * IntMatrix::identity(3));
  const IntMatrix S{{1, 2}, {2, 4}};
  EXPECT_EQ(determinant(S), BigInt(0));
}

TEST(Matrix, DeterminantNeedsPivoting) {
  const IntMatrix A{{0, 1}, {1, 0}};
  EXPECT_EQ(determinant(A), BigInt(-1));
}

TEST(Matrix, SeededAdjugateIdentity) {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 40; ++n) {
    IntMatrix A(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) A(i, j) = static_cast<int>(rng() % 21) - 10;
    ASSERT_EQ(A * adjugate(A), determinant(A) * IntMatrix::identity(4));
    ASSERT_EQ(determinant(A.transpose()), determinant(A));
  }
}

TEST(Matrix, Permutations) {
  const IntMatrix A{{1, 2}, {3, 4}};
  EXPECT_EQ(A.permute_rows({1, 0}), (IntMatrix{{3, 4}, {1, 2}}));
  EXPECT_EQ(A.permute_cols({1, 0}), (IntMatrix{{2, 1}, {4, 3}}));
}
