#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace cyclo3;

namespace {

using Set = std::vector<std::uint64_t>;

}  // namespace

TEST(Partition, S1Blocks) {
  const auto& p = fx::partition(1);
  EXPECT_EQ(p.T1, (Set{1, 2, 4}));
  EXPECT_EQ(p.T2, (Set{3, 5, 6}));
  EXPECT_EQ(p.T3, (Set{0}));
}

TEST(Partition, PsiValuesAtS1) {
  const auto& t = fx::tower(1);
  const auto D = compute_D(t);
  EXPECT_EQ(psi_omega_a_D(t, D, 0), -3);
  EXPECT_EQ(psi_omega_a_D(t, D, 1), -1);
  EXPECT_EQ(psi_omega_a_D(t, D, 3), 1);
  EXPECT_EQ(quadric_line_counts(t)[0], 0u);
}

TEST(Partition, SizesAndRoutesAgree) {
  for (unsigned s = 1; s <= 4; ++s) {
    const auto& t = fx::tower(s);
    const auto& p = fx::partition(s);
    const auto sizes = expected_block_sizes(s);
    const std::uint64_t q = 1u << s;
    EXPECT_EQ(sizes[0], q + 1);
    EXPECT_EQ(sizes[1], q * q / 2 + q / 2);
    EXPECT_EQ(sizes[2], q * q / 2 - q / 2);
    EXPECT_EQ(p.T1.size(), sizes[0]);
    EXPECT_EQ(p.T2.size(), sizes[1]);
    EXPECT_EQ(p.T3.size(), sizes[2]);
    EXPECT_EQ(partition_by_trace(t), p) << "s = " << s;
  }
  EXPECT_EQ(fx::partition(3).M, 73u);
}

TEST(Partition, IdentitiesHoldForS1To4) {
  for (unsigned s = 1; s <= 4; ++s) {
    const auto& p = fx::partition(s);
    EXPECT_TRUE(verify_singer(p).passed()) << verify_singer(p);
    EXPECT_TRUE(verify_lemma2(p).passed()) << verify_lemma2(p);
    EXPECT_TRUE(delta_square_check(p).passed()) << delta_square_check(p);
    EXPECT_TRUE(t1sq_t2inv_expansion(p).passed()) << t1sq_t2inv_expansion(p);
  }
}

TEST(Partition, PrintedT1SquaredT2InverseFormFailsAlone) {
  for (unsigned s = 1; s <= 4; ++s) {
    const auto r = verify_remark_eqs(fx::partition(s));
    for (const auto& c : r.checks) {
      EXPECT_EQ(c.passed, c.name.rfind("T1^2 T2^(-1)", 0) != 0) << c.name << " at s = " << s;
    }
  }
}

TEST(Partition, CorruptedPartitionFailsIdentities) {
  const auto bad = fx::corrupted(fx::partition(2));
  EXPECT_FALSE(verify_singer(bad).passed());
  EXPECT_FALSE(verify_lemma2(bad).passed());
}

TEST(Partition, DegenerateModulusRejected) {
  CyclotomicPartition p;
  p.s = 1;
  p.M = 1;
  p.T3 = {0};
  EXPECT_THROW(verify_lemma2(p), std::invalid_argument);
}
