#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace cyclo3;

namespace {

SchemeRecord record(unsigned s, FieldLabel label, const std::string& id) {
  return build_scheme_record(fx::context(s, label), FusionPattern::from_partition(fx::partition(s)), id, s);
}

}  // namespace

TEST(Scheme, BannaiMuzychukOnF) {
  for (unsigned s : {1u, 2u}) {
    const auto bm = bannai_muzychuk_verify(fx::context(s, FieldLabel::F),
                                           FusionPattern::from_partition(fx::partition(s)));
    EXPECT_TRUE(bm.is_scheme);
    EXPECT_EQ(bm.census.rows.size(), 3u);
  }
}

TEST(Scheme, CorruptedPartitionIsNotAScheme) {
  for (auto label : {FieldLabel::F, FieldLabel::G}) {
    const auto& c = fx::context(2, label);
    const auto pattern = FusionPattern::from_partition(fx::corrupted(fx::partition(2)));
    const auto bm = bannai_muzychuk_verify(c, pattern);
    EXPECT_FALSE(bm.is_scheme);
    EXPECT_GT(bm.census.rows.size(), 3u);
    EXPECT_THROW(build_scheme_record(c, pattern, "bad", 2), std::invalid_argument);
  }
}

TEST(Scheme, CorruptedPartitionFailsOracle) {
  const auto& c = fx::context(1, FieldLabel::G);
  const auto oracle = brute_force_intersection_oracle(c, FusionPattern::from_partition(fx::corrupted(fx::partition(1))));
  EXPECT_FALSE(oracle.constant);
}

TEST(Scheme, RecordInvariants) {
  for (unsigned s : {1u, 2u}) {
    for (auto [label, id] : {std::pair{FieldLabel::F, "thm1"}, {FieldLabel::G, "thm2i"}, {FieldLabel::H, "thm2ii"}}) {
      const auto r = record(s, label, id);
      EXPECT_TRUE(verify_record(r).passed()) << verify_record(r);
      EXPECT_EQ(r.P * r.Q, r.order * IntMatrix::identity(4));
    }
  }
}

TEST(Scheme, OracleAgreesWithEigenmatrixFormula) {
  for (auto [s, label] : {std::pair{1u, FieldLabel::F}, {1u, FieldLabel::G}, {2u, FieldLabel::F}}) {
    const auto& c = fx::context(s, label);
    const auto pattern = FusionPattern::from_partition(fx::partition(s));
    const auto oracle = brute_force_intersection_oracle(c, pattern);
    EXPECT_TRUE(oracle.constant) << oracle.detail;
    EXPECT_EQ(oracle.B, record(s, label, "x").B);
  }
}

TEST(Scheme, ClassificationFlags) {
  const auto f2 = record(2, FieldLabel::F, "thm1");
  EXPECT_FALSE(f2.flags.is_primitive);
  const auto g2 = record(2, FieldLabel::G, "thm2i");
  EXPECT_TRUE(g2.flags.is_primitive);
  EXPECT_FALSE(g2.flags.is_self_dual);
  for (unsigned s : {1u, 2u}) {
    const auto h = record(s, FieldLabel::H, "thm2ii");
    EXPECT_TRUE(h.flags.is_primitive);
    EXPECT_TRUE(h.flags.is_self_dual);
    ASSERT_TRUE(h.flags.p_squared_is_scalar.has_value());
    EXPECT_TRUE(*h.flags.p_squared_is_scalar);
    EXPECT_EQ(std::count(h.flags.srg_relations.begin(), h.flags.srg_relations.end(), true), 0);
  }
}

TEST(Scheme, SecondEigenmatrixRejectsNonIntegralQ) {
  const IntMatrix P{{1, 1}, {1, -1}};
  EXPECT_THROW(second_eigenmatrix(P, 3), InternalError);
}

TEST(Scheme, EigenmatrixOrderComparison) {
  const IntMatrix A{{1, 3, 3}, {1, -1, 1}, {1, 1, -1}};
  EXPECT_TRUE(same_eigenmatrix_up_to_order(A, A.permute_rows({0, 2, 1}).permute_cols({0, 2, 1})));
  EXPECT_FALSE(same_eigenmatrix_up_to_order(A, IntMatrix{{1, 3, 3}, {1, -1, 1}, {1, 1, 1}}));
}

TEST(Im10, RefinementIsSelfDualThreeClassScheme) {
  for (unsigned s : {1u, 2u}) {
    const auto& F = fx::tower(s).F;
    const auto im = im10_construct(F, im10_default_input(F), s);
    EXPECT_EQ(im.two_class.d(), 2u);
    EXPECT_EQ(im.three_class.d(), 3u);
    EXPECT_TRUE(im.three_class.flags.is_self_dual);
    EXPECT_TRUE(verify_record(im.three_class).passed());
  }
}

TEST(Im10, PreconditionFailure) {
  const auto& F = fx::tower(2).F;
  // The hyperplane contains 1 at even degree, so R_1 misses every dual class.
  EXPECT_THROW(im10_construct(F, trace_zero_hyperplane(F), 2), std::invalid_argument);
}
