#include <gtest/gtest.h>

#include <cmath>

#include "qweyl/expr_parser.hpp"
#include "qweyl/qring.hpp"
#include "qweyl/repn.hpp"
#include "qweyl/twist.hpp"

using namespace qweyl;

namespace {

::testing::AssertionResult passes(const Report& r) {
  if (r.passed()) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << r.suite << ": " << describe(*r.first_failure());
}

const std::vector<RingElem>& sample_betas() {
  static const std::vector<RingElem> b = {0, 1, RingElem::x_pow(4)};
  return b;
}

TwistConfig with_beta(const RingElem& b, Variant v = Variant::standard, int twice_alpha = 0) {
  TwistConfig c;
  c.beta1 = b;
  c.variant = v;
  c.alpha.twice = twice_alpha;
  return c;
}

}  // namespace

TEST(Coefficients, FirstTerms) {
  const RingElem b = RingElem::x_pow(4);
  const CoeffTable t = beta_coeffs(4, b);
  ASSERT_EQ(t.betas.size(), 5u);
  EXPECT_EQ(t.betas[0], RingElem(1));
  EXPECT_EQ(t.betas[1], b);
  EXPECT_EQ(t.betas[2], (b * b + q_power(-1) - 1) / q_int(2));
  for (int a = 0; a <= 4; ++a) EXPECT_EQ(t.beta_primes[a], t.betas[a] * q_factorial(a));
  EXPECT_EQ(t.alphas[0], RingElem(1));
  EXPECT_EQ(t.alphas[1], -b);
}

TEST(Coefficients, OddBetasVanishAtZero) {
  const CoeffTable t = beta_coeffs(12, 0);
  for (int k = 0; 2 * k + 1 <= 12; ++k) EXPECT_TRUE(t.betas[2 * k + 1].is_zero()) << 2 * k + 1;
  EXPECT_FALSE(t.betas[2].is_zero());
}

TEST(Coefficients, ShiftedRecursionStartsWrong) {
  const auto alphas = shifted_index_alphas(3, RingElem::x_pow(4));
  EXPECT_EQ(alphas[1], RingElem(-1));
}

TEST(Coefficients, SeriesAndBracketCoefficients) {
  EXPECT_EQ(series_coeff_B(0), RingElem(1));
  // B_1 = (1 - q^-1)(-q^(1/2)) q^(-1/2) = q^-1 - 1
  EXPECT_EQ(series_coeff_B(1), q_power(-1) - 1);
  EXPECT_TRUE(bracket_coeff(3, 2, -1).is_zero());
  EXPECT_EQ(bracket_coeff(3, 2, 0), RingElem(1));
}

TEST(Coefficients, BForm) {
  for (const auto& b : {RingElem(0), RingElem(1)}) EXPECT_TRUE(passes(verify_bform(10, b)));
  EXPECT_TRUE(passes(verify_bform(8, RingElem::x_pow(4), 4)));
}

TEST(Zhat, InverseForAllSampleBetas) {
  for (int d = 1; d <= 6; ++d)
    for (const auto& b : sample_betas()) EXPECT_TRUE(passes(verify_zhat_inverse(d, b))) << d;
}

TEST(Zhat, ShiftedRecursionFails) {
  EXPECT_FALSE(verify_zhat_inverse_shifted(2, 0).passed());
  EXPECT_FALSE(verify_zhat_inverse_shifted(2, RingElem::x_pow(4)).passed());
  EXPECT_FALSE(verify_zhat_inverse_shifted(3, 1).passed());
  EXPECT_FALSE(verify_zhat_inverse_shifted(4, 1).passed());
}

TEST(Zhat, ShiftedRecursionCoincidesAtUnitBetaInTwoDimensions) {
  // alpha_1 = -1 = -beta_1 when beta_1 = 1, and V_2 only sees alpha_1.
  EXPECT_TRUE(verify_zhat_inverse_shifted(2, 1).passed());
}

TEST(Zhat, IsUnipotentLowerTriangular) {
  const QMatrix z = zhat(4, 1);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(z(i, i), RingElem(1));
    for (std::size_t j = i + 1; j < 4; ++j) EXPECT_TRUE(z(i, j).is_zero());
  }
  EXPECT_EQ(z_elem(2, 0), QMatrix::diagonal({RingElem::x_pow(-1), RingElem::x_pow(-1)}));
}

TEST(Weyl, Relations) {
  for (int d = 1; d <= 6; ++d) EXPECT_TRUE(passes(verify_weyl(d))) << d;
}

TEST(Weyl, Antidiagonal) {
  const QMatrix w = weyl_w(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(w(i, j).is_zero(), i + j != 2) << i << j;
}

TEST(Twist, TwoDimensionalMatrix) {
  EXPECT_EQ(twist_t(2, with_beta(0)), QMatrix::from_rows({{0, -q_power(-3, 4)}, {q_power(-1, 4), 0}}));
  const RingElem b = parse_expr("2 + q");
  EXPECT_EQ(twist_t(2, with_beta(b)), QMatrix::from_rows({{-b * q_power(-1, 2), -q_power(-3, 4)}, {q_power(-1, 4), 0}}));
}

TEST(Twist, CornerEntry) {
  for (int d = 1; d <= 6; ++d) {
    const QMatrix t = twist_t(d, with_beta(1));
    const int e = (d - 1) * (d - 1);
    EXPECT_EQ(t(d - 1, 0), q_power(-e, 4) / q_factorial(d - 1)) << d;
    if (d >= 2) {
      const double q0 = 1.3;
      const NumMatrix sym = to_symmetric_basis(evaluate(t, q0), q0);
      EXPECT_NEAR(std::abs(sym(d - 1, 0) - std::pow(q0, -e / 4.0)), 0, 1e-12) << d;
    }
  }
}

TEST(Twist, CounitRepresentation) {
  for (const auto& b : sample_betas()) EXPECT_TRUE(passes(verify_counit(with_beta(b))));
  EXPECT_EQ(twist_t(1, with_beta(5)), QMatrix::identity(1));
}

TEST(Twist, FourBraid) {
  for (const auto& b : sample_betas())
    for (int da = 1; da <= 3; ++da)
      for (int db = 1; db <= 3; ++db) EXPECT_TRUE(passes(verify_four_braid(da, db, with_beta(b)))) << da << db;
}

TEST(Twist, FourBraidRejectsPerturbedTwist) {
  QMatrix t = twist_t(2, with_beta(1));
  t(1, 1) += 1;
  const Report r = verify_four_braid(t, t);
  ASSERT_FALSE(r.passed());
  const Check* f = r.first_failure();
  ASSERT_TRUE(f->mismatch.has_value());
  EXPECT_FALSE(f->mismatch->lhs == f->mismatch->rhs);
  EXPECT_NE(describe(*f).find("first difference at"), std::string::npos);
}

TEST(Twist, Zdelta) {
  for (int da = 1; da <= 3; ++da)
    for (int db = 1; db <= 3; ++db)
      for (const auto& b : sample_betas()) EXPECT_TRUE(passes(verify_zdelta(da, db, b))) << da << db;
}

TEST(Twist, Coproduct) {
  for (int da = 1; da <= 3; ++da)
    for (int db = 1; db <= 3; ++db) EXPECT_TRUE(passes(verify_coproduct(da, db, with_beta(1)))) << da << db;
  EXPECT_THROW(coproduct_t(2, 2, with_beta(1, Variant::affine)), std::invalid_argument);
}

TEST(Twist, CoproductOfZhatMatchesDirectExpansion) {
  // Delta(zhat) restricted to V_1 (x) V_d is zhat itself.
  EXPECT_EQ(coproduct_zhat(1, 3, 1), zhat(3, 1));
  EXPECT_EQ(coproduct_zhat(3, 1, 1), zhat(3, 1));
}

TEST(Variants, GoverningRelations) {
  const std::vector<std::pair<Variant, int>> variants = {{Variant::w_inverse, 0},   {Variant::k_conjugate, 1},
                                                         {Variant::k_conjugate, -1}, {Variant::k_conjugate, 2},
                                                         {Variant::u_conjugate, 0}, {Variant::affine, 0}};
  for (const auto& [v, a] : variants)
    for (int da = 1; da <= 3; ++da)
      for (int db = 1; db <= 3; ++db)
        EXPECT_TRUE(passes(verify_variant(da, db, with_beta(1, v, a)))) << to_string(v) << " " << da << db;
}

TEST(Variants, KConjugateWithZeroAlphaIsStandard) {
  EXPECT_EQ(twist_t(3, with_beta(1, Variant::k_conjugate, 0)), twist_t(3, with_beta(1)));
}

TEST(Variants, AffineFailsTheUntwistedEquation) {
  // tbar solves the R/R21-swapped equation, not the original one.
  EXPECT_FALSE(verify_four_braid(2, 2, with_beta(1, Variant::affine)).passed());
}

TEST(Variants, Parsing) {
  EXPECT_EQ(parse_variant("w-inverse"), Variant::w_inverse);
  EXPECT_EQ(parse_variant("u_conjugate"), Variant::u_conjugate);
  EXPECT_THROW(parse_variant("sideways"), std::invalid_argument);
  EXPECT_EQ(HalfInteger::from_string("-1/2").twice, -1);
  EXPECT_EQ(HalfInteger::from_string("3").twice, 6);
  EXPECT_EQ(HalfInteger::from_string("-1/2").to_string(), "-1/2");
  EXPECT_THROW(HalfInteger::from_string("1/3"), std::invalid_argument);
  EXPECT_THROW(HalfInteger::from_string("abc"), std::invalid_argument);
}

TEST(PaperMatrices, Residuals) {
  for (int d = 2; d <= 4; ++d)
    for (const double b : {0.0, 1.0, 2.0, -0.5})
      for (const double q0 : {0.7, 1.3, 2.5}) EXPECT_LT(compare_paper_matrix(d, b, q0), 1e-9) << d << " " << b << " " << q0;
}

TEST(PaperMatrices, DetectsWrongBeta) {
  // The exact twist at beta_1 = 1 against the published matrix at beta_1 = 2.
  TwistConfig c = with_beta(1);
  const double q0 = 0.7;
  const NumMatrix sym = to_symmetric_basis(evaluate(twist_t(3, c), q0), q0);
  EXPECT_GT((sym - published_twist_matrix(3, 2.0, q0)).cwiseAbs().maxCoeff(), 1e-3);
}

TEST(PaperMatrices, RejectsBadArguments) {
  EXPECT_THROW(compare_paper_matrix(5, 0, 0.7), std::invalid_argument);
  EXPECT_THROW(compare_paper_matrix(1, 0, 0.7), std::invalid_argument);
  EXPECT_THROW(compare_paper_matrix(2, 0, -0.7), std::invalid_argument);
  EXPECT_THROW(compare_paper_matrix(2, 0, 1.0), std::invalid_argument);
}
