#include <gtest/gtest.h>

#include "qweyl/qring.hpp"
#include "qweyl/repn.hpp"
#include "qweyl/rmatrix.hpp"
#include "qweyl/twist.hpp"

using namespace qweyl;

namespace {

::testing::AssertionResult passes(const Report& r) {
  if (r.passed()) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << describe(*r.first_failure());
}

}  // namespace

TEST(RMatrix, SeriesCoefficients) {
  EXPECT_EQ(r_series_coeff(0), RingElem(1));
  EXPECT_EQ(r_series_coeff(1), RingElem(1) - q_power(-1));
  // (1 - q^-1)^2 / [2] * q^(1/2)
  const RingElem a = RingElem(1) - q_power(-1);
  EXPECT_EQ(r_series_coeff(2), a * a / q_int(2) * q_power(1, 2));
}

TEST(RMatrix, TwoByTwoExplicit) {
  const RingElem x2 = RingElem::x_pow(2);
  const RingElem xm2 = RingElem::x_pow(-2);
  // Index 1 is e0 (x) e1, index 2 is e1 (x) e0; the E (x) F term links them.
  const QMatrix r = r_matrix(2, 2);
  EXPECT_EQ(r(0, 0), x2);
  EXPECT_EQ(r(3, 3), x2);
  EXPECT_EQ(r(1, 1), xm2);
  EXPECT_EQ(r(2, 2), xm2);
  EXPECT_EQ(r.nonzeros(), 5u);
  EXPECT_EQ(r(1, 2), x2 - RingElem::x_pow(-6));
}

TEST(RMatrix, OneDimensionalFactorIsTrivial) {
  EXPECT_EQ(r_matrix(1, 3), QMatrix::identity(3));
  EXPECT_EQ(r_matrix(4, 1), QMatrix::identity(4));
}

TEST(RMatrix, FamilyInverse) {
  const RFamily f = r_family(3, 2);
  EXPECT_EQ(f.R * f.Rinv, QMatrix::identity(6));
  EXPECT_EQ(f.R21, r21_matrix(3, 2));
}

TEST(RMatrix, YangBaxter) {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) EXPECT_TRUE(passes(verify_yang_baxter(a, b, c))) << a << b << c;
}

TEST(RMatrix, Intertwiner) {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) EXPECT_TRUE(passes(verify_intertwiner(a, b))) << a << b;
}

TEST(RMatrix, IntertwinerDetectsWrongCartanFactor) {
  // Dropping the Cartan factor breaks R Delta(X) = Delta'(X) R.
  const QMatrix wrong = cartan_factor(2, 2, -1) * r_matrix(2, 2);
  const QMatrix lhs = wrong * coproduct(Generator::X, 2, 2);
  const QMatrix rhs = coproduct_op(Generator::X, 2, 2) * wrong;
  EXPECT_FALSE(lhs == rhs);
}

TEST(BraidMatrix, QuadraticMinimalPolynomialInTwoDimensions) {
  // B^2 = s B + p with s = q^(1/4) - q^(-3/4), p = q^(-1/2); eigenvalues q^(1/4), -q^(-3/4).
  const QMatrix b = braid_matrix(2);
  const RingElem s = RingElem::x_pow(2) - RingElem::x_pow(-6);
  const RingElem p = RingElem::x_pow(-4);
  EXPECT_EQ(b * b, b.scaled(s) + QMatrix::identity(4).scaled(p));
  const QMatrix i4 = QMatrix::identity(4);
  EXPECT_TRUE(((b - i4.scaled(RingElem::x_pow(2))) * (b + i4.scaled(RingElem::x_pow(-6)))).is_zero());
  EXPECT_FALSE((b - i4.scaled(RingElem::x_pow(2))).is_zero());
}

TEST(BraidMatrix, BraidRelationOnThreeStrands) {
  for (int d = 1; d <= 3; ++d) {
    const QMatrix b = braid_matrix(d);
    const QMatrix i = QMatrix::identity(d);
    const QMatrix b1 = kron(b, i);
    const QMatrix b2 = kron(i, b);
    EXPECT_EQ(b1 * b2 * b1, b2 * b1 * b2) << d;
  }
}

TEST(DrinfeldU, TwoDimensional) {
  EXPECT_EQ(drinfeld_u(2), QMatrix::diagonal({RingElem::x_pow(-2), RingElem::x_pow(-10)}));
  EXPECT_EQ(drinfeld_u(1), QMatrix::identity(1));
}

TEST(DrinfeldU, ImplementsSquaredAntipode) {
  for (int d = 1; d <= 4; ++d) EXPECT_TRUE(passes(verify_drinfeld_u(d))) << d;
}

TEST(WeylR, ConjugatesRToR21) {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) EXPECT_TRUE(passes(verify_weyl_r(a, b))) << a << b;
}

TEST(ConjugatedR, InverseOfCartanPart) {
  // With no F (x) F terms (b = 1) only q^(-H(x)H/4) remains.
  EXPECT_EQ(conjugated_r(3, 1), cartan_factor(3, 1, -1));
}
