#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace cyclo3;

TEST(Gf2x, CarrylessProductAndReduction) {
  EXPECT_EQ(gf2x::clmul(0b11, 0b11), gf2x::Wide{0b101});
  EXPECT_EQ(gf2x::mulmod(0b100, 0b10, 0b1011), gf2x::Poly{0b011});
  EXPECT_EQ(gf2x::gcd(0b110, 0b11), gf2x::Poly{0b11});
}

TEST(Gf2x, HexRoundTrip) {
  EXPECT_EQ(gf2x::from_hex("b"), gf2x::Poly{0b1011});
  EXPECT_EQ(gf2x::from_hex("0x43"), gf2x::Poly{0x43});
  EXPECT_EQ(gf2x::to_hex(0x1053), "1053");
  EXPECT_THROW(gf2x::from_hex("xyz"), std::invalid_argument);
}

TEST(BinaryField, DefaultModulusDegree3) {
  const auto K = BinaryField::build(3);
  EXPECT_EQ(K.modulus(), gf2x::Poly{0b1011});
  EXPECT_EQ(K.size(), 8u);
  EXPECT_TRUE(K.is_primitive_element(K.generator()));
}

TEST(BinaryField, PrimeFieldDegenerate) {
  const auto K = BinaryField::build(1);
  EXPECT_EQ(K.modulus(), gf2x::Poly{0b11});
  EXPECT_EQ(K.generator(), Element{1});
  EXPECT_EQ(K.group_order(), 1u);
}

TEST(BinaryField, ReducibleModulusRejectedWithCertificate) {
  try {
    BinaryField::build(3, 0b1111);
    FAIL() << "expected rejection";
  } catch (const ModulusRejected& e) {
    EXPECT_EQ(e.reason(), ModulusRejected::Reason::Reducible);
    EXPECT_EQ(e.certificate(), 1u);
  }
}

TEST(BinaryField, ProductOfIrreduciblesWithoutRootsRejected) {
  // (x^2+x+1)(x^3+x+1): no root in GF(2), factor of degree 2.
  const gf2x::Poly f = static_cast<gf2x::Poly>(gf2x::clmul(0b111, 0b1011));
  try {
    BinaryField::build(5, f);
    FAIL() << "expected rejection";
  } catch (const ModulusRejected& e) {
    EXPECT_EQ(e.reason(), ModulusRejected::Reason::Reducible);
    EXPECT_EQ(e.certificate(), 2u);
  }
}

TEST(BinaryField, NonPrimitiveModulusRejected) {
  // x^4+x^3+x^2+x+1 is irreducible with x of order 5.
  try {
    BinaryField::build(4, 0b11111);
    FAIL() << "expected rejection";
  } catch (const ModulusRejected& e) {
    EXPECT_EQ(e.reason(), ModulusRejected::Reason::NotPrimitive);
    EXPECT_EQ(e.certificate(), 5u);
  }
}

TEST(BinaryField, WrongDegreeRejected) { EXPECT_THROW(BinaryField::build(4, 0b1011), ModulusRejected); }

TEST(BinaryField, InverseOfZeroIsDomainError) {
  const auto K = BinaryField::build(6);
  EXPECT_THROW(K.inv(0), std::domain_error);
}

TEST(BinaryField, SeededFieldAxioms) {
  std::mt19937_64 rng(7);
  for (unsigned m : {5u, 12u, 18u, 31u, 45u}) {
    const auto K = BinaryField::build(m);
    for (int n = 0; n < 300; ++n) {
      const Element a = rng() % K.size(), b = rng() % K.size(), c = rng() % K.size();
      ASSERT_EQ(K.mul(a, K.mul(b, c)), K.mul(K.mul(a, b), c));
      ASSERT_EQ(K.mul(a, b ^ c), K.mul(a, b) ^ K.mul(a, c));
      ASSERT_EQ(K.trace_bit(a ^ b), K.trace_bit(a) ^ K.trace_bit(b));
      ASSERT_EQ(K.frobenius(a, m), a);
      if (a) {
        ASSERT_EQ(K.mul(a, K.inv(a)), Element{1});
      }
    }
  }
}

TEST(BinaryField, TraceAndNormToSubfield) {
  const auto K = BinaryField::build(6);
  std::int64_t psi_sum = 0;
  for (Element u = 0; u < K.size(); ++u) {
    psi_sum += K.psi(u);
    ASSERT_TRUE(K.in_subfield(3, K.rel_trace(3, u)));
    ASSERT_TRUE(K.in_subfield(2, K.norm(2, u)));
  }
  EXPECT_EQ(psi_sum, 0);
  EXPECT_THROW(K.rel_trace(4, 1), std::invalid_argument);
}

TEST(BinaryField, DiscreteLogClasses) {
  const auto K = BinaryField::build(6);
  EXPECT_EQ(K.dlog(K.pow(K.generator(), 45)), 45u);
  EXPECT_EQ(dlog_class(K, 7, K.pow(K.generator(), 45)), 45u % 7);
  EXPECT_THROW(dlog_class(K, 5, 1), std::invalid_argument);
  EXPECT_THROW(K.dlog(0), std::domain_error);
}
