#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace cyclo3;

namespace {

std::vector<BigInt> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(QPolynomial, Evaluation) {
  const QPolynomial p({Rational(1, 2), 0, Rational(1, 2)});
  EXPECT_EQ(p.evaluate_integer(3), BigInt(5));
  EXPECT_THROW(p.evaluate_integer(2), InternalError);
  EXPECT_TRUE(QPolynomial({0, 0}).is_zero());
}

TEST(Appendix, TableRowExamples) {
  EXPECT_EQ(table_row("I", "-T1", 2), ints({1, -1, 1, -1}));
  EXPECT_EQ(table_row("V", "T3", 2), ints({1, -21, 3, 17}));
  EXPECT_EQ(table_row("III", "zero", 2), ints({1, 27, 27, 9}));
  EXPECT_THROW(table_row("I", "T9", 2), std::invalid_argument);
}

TEST(Appendix, IntersectionMatrixExamples) {
  EXPECT_EQ(appendix_matrix("thm1", "B1", 2).value, (IntMatrix{{0, 3, 0, 0}, {1, 2, 0, 0}, {0, 0, 2, 1}, {0, 0, 3, 0}}));
  EXPECT_EQ(appendix_matrix("thm1", "L1", 2).value, (IntMatrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}));
  const auto B1 = appendix_matrix("thm1", "B1", 4).value;
  BigInt row = 0;
  for (std::size_t j = 0; j < 4; ++j) row += B1(1, j);
  EXPECT_EQ(row, BigInt(15));
  const auto L = appendix_matrix("thm2ii", "L2", 2);
  EXPECT_EQ(L.value, appendix_matrix("thm2ii", "B2", 2).value);
  EXPECT_FALSE(L.note.empty());
}

TEST(Reconcile, AllSchemesAtS1AndS2) {
  for (unsigned s : {1u, 2u}) {
    for (const std::string id : {"thm1", "thm2i", "thm2ii"}) {
      const auto rc = reconcile(fx::context(s, field_of(id)), fx::partition(s), id);
      EXPECT_TRUE(rc.report.passed()) << rc.report;
      if (id != "thm2ii") {
        EXPECT_TRUE(dual_structure_check(fx::tower(s), fx::partition(s), rc.scheme).passed());
      }
    }
  }
}

TEST(Reconcile, PerturbedEigenmatrixIsReported) {
  const auto rc = reconcile(fx::context(1, FieldLabel::F), fx::partition(1), "thm1");
  auto bad = rc.scheme;
  bad.P(2, 2) += 1;
  EXPECT_FALSE(reconcile_table(appendix().table_for("thm1"), bad, fx::partition(1)).passed());
  auto badB = rc.scheme;
  badB.B[1](0, 1) += 1;
  EXPECT_FALSE(reconcile_intersection_matrices("thm1", badB, rc.dual).passed());
}
