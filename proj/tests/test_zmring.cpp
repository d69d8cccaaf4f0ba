#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace cyclo3;

namespace {

std::vector<BigInt> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

ZM set(std::uint64_t M, std::vector<std::uint64_t> r) { return ZM::from_set(M, r); }

}  // namespace

TEST(ZM, FromSet) {
  EXPECT_EQ(set(7, {1, 2, 4}).coeffs(), ints({0, 1, 1, 0, 1, 0, 0}));
  EXPECT_EQ(set(7, {}), ZM::zero(7));
  EXPECT_EQ(set(7, {0, 1, 2, 3, 4, 5, 6}), ZM::all(7));
  EXPECT_THROW(set(7, {7}), std::invalid_argument);
}

TEST(ZM, SingerProductAtM7) {
  const ZM T1 = set(7, {1, 2, 4});
  EXPECT_EQ((T1 * T1.involute()).coeffs(), ints({3, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ((T1 * T1).coeffs(), ints({0, 1, 1, 2, 1, 2, 2}));
  EXPECT_EQ(T1 * T1, T1 + BigInt(2) * set(7, {3, 5, 6}));
}

TEST(ZM, ModulusMismatch) { EXPECT_THROW(set(7, {1}) * set(5, {1}), std::invalid_argument); }

TEST(ZM, SeededRingLaws) {
  std::mt19937_64 rng(11);
  const std::uint64_t M = 21;
  auto random = [&] {
    std::vector<BigInt> c(M);
    for (auto& x : c) x = static_cast<int>(rng() % 9) - 4;
    return ZM(M, c);
  };
  for (int n = 0; n < 50; ++n) {
    const ZM a = random(), b = random(), c = random();
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a * b).augmentation(), a.augmentation() * b.augmentation());
    ASSERT_EQ((a * b).involute(), a.involute() * b.involute());
  }
}
