#include <gtest/gtest.h>

#include <cstdlib>
#include <optional>
#include <random>
#include <string>

#include "qweyl/braidrep.hpp"
#include "qweyl/rmatrix.hpp"

using namespace qweyl;

namespace {

TwistConfig with_beta(const RingElem& b) {
  TwistConfig c;
  c.beta1 = b;
  return c;
}

// Sets an environment variable for the lifetime of the object.
class ScopedEnv {
public:
  ScopedEnv(const char* name, const char* value) : name_(name) {
    if (const char* old = std::getenv(name)) old_ = old;
    ::setenv(name, value, 1);
  }
  ~ScopedEnv() {
    if (old_)
      ::setenv(name_, old_->c_str(), 1);
    else
      ::unsetenv(name_);
  }

private:
  const char* name_;
  std::optional<std::string> old_;
};

BraidWord random_word(std::mt19937& gen, int strands, int length) {
  std::uniform_int_distribution<int> g(0, strands - 1);
  std::bernoulli_distribution inv(0.3);
  BraidWord w;
  w.strands = strands;
  for (int i = 0; i < length; ++i) w.letters.push_back({g(gen), inv(gen) ? -1 : 1});
  return w;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  BraidWord w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

}  // namespace

TEST(BraidWord, Parse) {
  const BraidWord w = BraidWord::parse("0 1 0' 2'", 3);
  ASSERT_EQ(w.letters.size(), 4u);
  EXPECT_EQ(w.letters[2].generator, 0);
  EXPECT_EQ(w.letters[2].power, -1);
  EXPECT_EQ(w.letters[3].generator, 2);
  EXPECT_TRUE(BraidWord::parse("  ", 2).letters.empty());
}

TEST(BraidWord, ParseErrors) {
  EXPECT_THROW(BraidWord::parse("0 3", 3), std::invalid_argument);
  EXPECT_THROW(BraidWord::parse("-1", 3), std::invalid_argument);
  EXPECT_THROW(BraidWord::parse("a", 3), std::invalid_argument);
  EXPECT_THROW(BraidWord::parse("1x", 3), std::invalid_argument);
  EXPECT_THROW(BraidWord::parse("'", 3), std::invalid_argument);
  EXPECT_THROW(BraidWord::parse("0", 0), std::invalid_argument);
}

TEST(ZBn, GeneratorShapes) {
  const RepBundle b = zbn_generators(2, 3, with_beta(1));
  ASSERT_EQ(b.generators.size(), 3u);
  EXPECT_EQ(b.size(), 8u);
  EXPECT_EQ(b.generators[0], kron(b.twist, QMatrix::identity(4)));
  EXPECT_EQ(b.generators[2], kron(QMatrix::identity(2), b.braid));
  EXPECT_EQ(b.generators[1] * b.generator_inverse(1), QMatrix::identity(8));
}

TEST(ZBn, OneDimensionalIsTrivial) {
  const Report r = verify_zbn_relations(1, 3, with_beta(1));
  EXPECT_TRUE(r.passed());
}

TEST(ZBn, ThreeStrandSuite) {
  for (const int d : {2, 3})
    for (const RingElem b : {RingElem(0), RingElem(1)}) {
      const Report r = verify_zbn_relations(d, 3, with_beta(b));
      EXPECT_TRUE(r.passed()) << d << ": " << (r.passed() ? "" : describe(*r.first_failure()));
      EXPECT_EQ(r.checks.size(), 3u);
    }
}

TEST(ZBn, FourStrandCommutation) {
  const Report r = verify_zbn_relations(2, 4, with_beta(1));
  EXPECT_TRUE(r.passed());
  int far = 0;
  int t0 = 0;
  for (const auto& c : r.checks) {
    far += c.name.rfind("far commutation", 0) == 0;
    t0 += c.name.rfind("t0 commutation", 0) == 0;
  }
  EXPECT_EQ(far, 1);  // t1 t3
  EXPECT_EQ(t0, 2);   // t0 t2, t0 t3
}

TEST(ZBn, PerturbedTwistBreaksTypeBRelation) {
  QMatrix t = twist_t(2, with_beta(1));
  t(1, 1) += 1;
  const Report r = verify_zbn_relations(zbn_generators(2, 3, t, braid_matrix(2)));
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.first_failure()->name.rfind("type-B relation", 0), 0u);
  EXPECT_TRUE(r.first_failure()->mismatch.has_value());
}

TEST(ZBn, TopLeftShiftStaysInTwistFamily) {
  // t(0,0) = -beta_1 q^(-1/2), so shifting it by c moves beta_1 to beta_1 - c q^(1/2).
  QMatrix t = twist_t(2, with_beta(1));
  t(0, 0) += 1;
  EXPECT_EQ(t, twist_t(2, with_beta(RingElem(1) - RingElem::x_pow(4))));
  EXPECT_TRUE(verify_zbn_relations(zbn_generators(2, 3, t, braid_matrix(2))).passed());
}

TEST(ZBn, WordEvaluationIsHomomorphism) {
  const RepBundle b = zbn_generators(2, 3, with_beta(1));
  std::mt19937 gen(11);
  for (int trial = 0; trial < 20; ++trial) {
    const BraidWord u = random_word(gen, 3, 4);
    const BraidWord v = random_word(gen, 3, 3);
    EXPECT_EQ(eval_braid_word(concat(u, v), b), eval_braid_word(u, b) * eval_braid_word(v, b));
  }
  EXPECT_EQ(eval_braid_word(BraidWord::parse("", 3), b), QMatrix::identity(8));
  EXPECT_EQ(eval_braid_word(BraidWord::parse("1 1'", 3), b), QMatrix::identity(8));
}

TEST(ZBn, WordStrandMismatchThrows) {
  const RepBundle b = zbn_generators(2, 2, with_beta(1));
  EXPECT_THROW(eval_braid_word(BraidWord::parse("0", 3), b), std::invalid_argument);
}

TEST(ZBn, ExactGuardrail) {
  EXPECT_EQ(max_exact_dim(), 256u);
  EXPECT_THROW(zbn_generators(3, 6, with_beta(0)), std::length_error);
  EXPECT_THROW(zbn_generators(2, 9, with_beta(0)), std::length_error);
  {
    ScopedEnv env("QW_MAX_EXACT_DIM", "512");
    EXPECT_EQ(max_exact_dim(), 512u);
    EXPECT_NO_THROW(zbn_generators(2, 9, with_beta(0)));
  }
  {
    ScopedEnv env("QW_MAX_EXACT_DIM", "junk");
    EXPECT_EQ(max_exact_dim(), 256u);
  }
}

TEST(ZBn, NumericModeBeyondGuardrail) {
  const NumericBundle b = zbn_generators_numeric(2, 9, with_beta(1), 0.7);
  ASSERT_EQ(b.generators.front().rows(), 512);
  const Report r = verify_zbn_relations(b, 1e-9);
  EXPECT_TRUE(r.passed()) << (r.passed() ? "" : describe(*r.first_failure()));
}

TEST(ZBn, NumericAgreesWithExact) {
  const double q0 = 1.3;
  const RepBundle exact = zbn_generators(3, 3, with_beta(1));
  const NumericBundle num = zbn_generators_numeric(3, 3, with_beta(1), q0);
  const BraidWord w = BraidWord::parse("0 1 2' 0' 1", 3);
  EXPECT_LT((evaluate(eval_braid_word(w, exact), q0) - eval_braid_word(w, num)).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(ZBn, TwoEquationFormsAgree) {
  // The R form and B form of the four-braid equation give identical verdicts.
  // (d = 1 is skipped: every scalar solves both.)
  for (int d = 2; d <= 3; ++d) {
    for (const int poke : {0, 1}) {
      QMatrix t = twist_t(d, with_beta(1));
      if (poke) t(d - 1, d - 1) += RingElem::x_pow(3);
      const Report r = verify_four_braid(t, t);
      ASSERT_EQ(r.checks.size(), 2u);
      EXPECT_EQ(r.checks[0].passed, r.checks[1].passed) << d << " " << poke;
      EXPECT_EQ(r.checks[0].passed, poke == 0) << d;
    }
  }
}

TEST(Affine, Relation) {
  for (int d = 1; d <= 3; ++d)
    for (const RingElem b : {RingElem(0), RingElem(1), RingElem::x_pow(4)}) {
      const Report r = verify_affine_relation(d, with_beta(b));
      EXPECT_TRUE(r.passed()) << d;
    }
}
