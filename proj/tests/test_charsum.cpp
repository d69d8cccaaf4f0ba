#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace cyclo3;

namespace {

std::vector<CyclotomicInteger> sums(unsigned s, FieldLabel label) {
  const auto& t = fx::tower(s);
  return gauss_sums(make_cyclotomic_ring(t.M()), lifted_class_sums(t, label, 2));
}

GaussPeriodVector periods(unsigned s, FieldLabel label) {
  const auto& c = fx::context(s, label);
  return {label, c.M, c.class_size, c.eta};
}

}  // namespace

TEST(Cyclotomic, Polynomials) {
  EXPECT_EQ(cyclotomic_polynomial(7), (IntPoly{1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(1), (IntPoly{-1, 1}));
  IntPoly prod{1};
  for (auto d : {1, 3, 7, 21}) prod = poly::mul(prod, cyclotomic_polynomial(d));
  IntPoly x21(22);
  x21[0] = -1;
  x21[21] = 1;
  EXPECT_EQ(cyclotomic_polynomial(21).size(), 13u);
  EXPECT_EQ(prod, x21);
}

TEST(Cyclotomic, ZetaArithmetic) {
  const auto R = make_cyclotomic_ring(7);
  const auto z = CyclotomicInteger::zeta_power(R, 1);
  EXPECT_EQ(z.pow(7), CyclotomicInteger::rational(R, 1));
  CyclotomicInteger sum = CyclotomicInteger::rational(R, 0);
  for (unsigned k = 0; k < 7; ++k) sum = sum + z.pow(k);
  EXPECT_EQ(sum.as_rational(), BigInt(0));
}

TEST(Periods, TotalsAndStreamingAgree) {
  for (unsigned s : {1u, 2u}) {
    const auto& t = fx::tower(s);
    for (auto label : {FieldLabel::F, FieldLabel::G}) {
      const auto eta = gauss_periods(t, label, 3);
      EXPECT_EQ(eta.total(), -1);
      const auto& K = t.field(label);
      EXPECT_EQ(stream_periods(K, t.M(), t.base_exponent(label), 1),
                table_periods(K, t.M(), t.base_exponent(label)));
    }
  }
}

TEST(Periods, EtaPrimeLawExamplesAtS1) {
  const auto& t = fx::tower(1);
  const auto eG = periods(1, FieldLabel::G);
  EXPECT_EQ(eG[0], 5);
  EXPECT_EQ(eG[1], 1);
  EXPECT_TRUE(eta_prime_law_check(t, compute_D(t), eG).passed());
}

TEST(Periods, DistinctValuesOnH) {
  EXPECT_EQ(distinct_values(periods(1, FieldLabel::H)), 3u);
  EXPECT_GT(distinct_values(periods(2, FieldLabel::H)), 3u);
}

TEST(GaussSums, PrincipalAndFirstCharacterAtS1) {
  const auto gF = sums(1, FieldLabel::F);
  const auto R = gF[0].ring();
  EXPECT_EQ(gF[0], CyclotomicInteger::rational(R, -1));
  const auto expected = BigInt(2) * (CyclotomicInteger::zeta_power(R, 1) + CyclotomicInteger::zeta_power(R, 2) +
                                     CyclotomicInteger::zeta_power(R, 4));
  EXPECT_EQ(gF[1], expected);
  const auto gG = sums(1, FieldLabel::G);
  EXPECT_EQ(gG[1], -(expected * expected));
  const auto gH = sums(1, FieldLabel::H);
  EXPECT_EQ(gH[1], expected.pow(3));
}

TEST(GaussSums, SuiteHoldsAtS1AndS2) {
  for (unsigned s : {1u, 2u}) {
    const auto& t = fx::tower(s);
    const auto gF = sums(s, FieldLabel::F), gG = sums(s, FieldLabel::G), gH = sums(s, FieldLabel::H);
    EXPECT_TRUE(verify_gauss_sum_modulus(gF, t.F.size(), "F").passed());
    EXPECT_TRUE(verify_t1_gauss_identity(t, fx::partition(s), gF).passed());
    EXPECT_TRUE(verify_hasse_davenport(gF, gG, 2).passed());
    EXPECT_TRUE(verify_hasse_davenport(gF, gH, 3).passed());
    EXPECT_TRUE(verify_periods_from_sums(gF, gauss_periods(t, FieldLabel::F)).passed());
    EXPECT_TRUE(verify_periods_from_sums(gG, periods(s, FieldLabel::G)).passed());
    EXPECT_TRUE(verify_periods_from_sums(gH, periods(s, FieldLabel::H)).passed());
  }
}

TEST(GaussSums, PerturbedSumIsRejected) {
  const auto& t = fx::tower(1);
  auto gF = sums(1, FieldLabel::F);
  gF[3] = gF[3] + CyclotomicInteger::rational(gF[3].ring(), 1);
  EXPECT_FALSE(verify_gauss_sum_modulus(gF, t.F.size(), "F").passed());
  EXPECT_FALSE(verify_periods_from_sums(gF, gauss_periods(t, FieldLabel::F)).passed());
  EXPECT_FALSE(verify_hasse_davenport(gF, sums(1, FieldLabel::G), 2).passed());
}
