#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace cyclo3;

TEST(Tower, DegreesAndNormsAtS1) {
  const auto& t = fx::tower(1);
  EXPECT_EQ(t.E.size(), 2u);
  EXPECT_EQ(t.F.size(), 8u);
  EXPECT_EQ(t.G.size(), 64u);
  EXPECT_EQ(t.H.size(), 512u);
  EXPECT_EQ(t.M(), 7u);
  EXPECT_EQ(t.G.norm(3, t.gamma), t.embed_G.apply(t.omega));
  EXPECT_EQ(t.H.norm(3, t.beta), t.embed_H.apply(t.omega));
}

TEST(Tower, EmbeddingsAreExhaustivelyMultiplicativeAtS2) {
  const auto& t = fx::tower(2);
  EXPECT_EQ(t.G.degree(), 12u);
  EXPECT_EQ(t.H.degree(), 18u);
  for (Element a = 0; a < t.F.size(); ++a) {
    for (Element b = 0; b < t.F.size(); ++b) {
      ASSERT_EQ(t.embed_G.apply(t.F.mul(a, b)), t.G.mul(t.embed_G.apply(a), t.embed_G.apply(b)));
      ASSERT_EQ(t.embed_H.apply(t.F.mul(a, b)), t.H.mul(t.embed_H.apply(a), t.embed_H.apply(b)));
    }
  }
  EXPECT_EQ(t.G.norm(6, t.gamma), t.embed_G.apply(t.omega));
  EXPECT_EQ(t.H.norm(6, t.beta), t.embed_H.apply(t.omega));
  EXPECT_TRUE(t.G.is_primitive_element(t.gamma));
  EXPECT_TRUE(t.H.is_primitive_element(t.beta));
}

TEST(Tower, EmbeddingPreimage) {
  const auto& t = fx::tower(1);
  for (Element a = 0; a < t.F.size(); ++a) EXPECT_EQ(t.embed_G.preimage(t.embed_G.apply(a)), a);
}

TEST(Tower, OutOfRangeParameters) {
  EXPECT_THROW(build_tower(0), std::invalid_argument);
  EXPECT_THROW(build_tower(6), std::invalid_argument);
}

TEST(Tower, ModulusOverride) {
  const auto t = build_tower(1, TowerModuli{0b1101, std::nullopt, std::nullopt});
  EXPECT_EQ(t.F.modulus(), gf2x::Poly{0b1101});
  EXPECT_EQ(t.G.norm(3, t.gamma), t.embed_G.apply(t.omega));
}
