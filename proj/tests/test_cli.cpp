#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "qweyl/serialize.hpp"
#include "qweyl/twist.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = qweyl::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, TwistLatex) {
  const Result r = run({"twist", "--dim", "2", "--beta1", "0", "--format", "latex"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "\\begin{pmatrix}\n  0 & -q^{-3/4} \\\\\n  q^{-1/4} & 0\n\\end{pmatrix}\n");
}

TEST(Cli, TwistJsonRoundTrips) {
  const Result r = run({"twist", "--dim", "3", "--beta1", "1 + q^(1/2)"});
  ASSERT_EQ(r.code, 0) << r.err;
  qweyl::TwistConfig c;
  c.beta1 = qweyl::RingElem(1) + qweyl::RingElem::x_pow(4);
  EXPECT_EQ(qweyl::qmatrix_from_json(r.out), qweyl::twist_t(3, c));
}

TEST(Cli, TwistSymmetricBasisNeedsSamplePoint) {
  EXPECT_EQ(run({"twist", "--dim", "3", "--beta1", "1", "--basis", "symmetric"}).code, 2);
  EXPECT_EQ(run({"twist", "--dim", "3", "--beta1", "1", "--basis", "symmetric", "--at-q", "-1"}).code, 2);
  const Result r = run({"twist", "--dim", "3", "--beta1", "1", "--basis", "symmetric", "--at-q", "1.3", "--format", "plain"});
  EXPECT_EQ(r.code, 0);
  // Bottom-left corner is q^-1.
  EXPECT_NE(r.out.find("0.769230769230769"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"twist", "--dim", "99", "--strands", "-1"}).code, 2);
  EXPECT_EQ(run({"twist", "--dim", "2", "--beta1", "0", "--strands", "3"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"twist", "--dim", "0", "--beta1", "0"}).code, 2);
  EXPECT_EQ(run({"twist", "--dim", "2", "--beta1", "y"}).code, 2);
  EXPECT_EQ(run({"twist", "--dim", "2", "--beta1", "0", "--variant", "odd"}).code, 2);
  EXPECT_EQ(run({"twist", "--dim", "2", "--beta1", "0", "--alpha", "1/3"}).code, 2);
  EXPECT_EQ(run({"rmatrix", "--dims", "2"}).code, 2);
  EXPECT_EQ(run({"verify", "nonsense"}).code, 2);
  EXPECT_EQ(run({"zbn", "--dim", "2", "--strands", "3", "--word", "0 5"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Irrep) {
  const Result r = run({"irrep", "--dim", "2", "--format", "plain"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("K:\nq^(1/4)"), std::string::npos) << r.out;
}

TEST(Cli, RMatrixNumeric) {
  const Result r = run({"rmatrix", "--dims", "2,2", "--at-q", "16", "--format", "plain"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 1), "2");  // 16^(1/4)
}

TEST(Cli, Coeffs) {
  const Result r = run({"coeffs", "--beta1", "0", "--terms", "3", "--format", "plain"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("a=3  beta=0"), std::string::npos) << r.out;
}

TEST(Cli, VerifyAll) {
  const Result r = run({"verify", "all", "--max-dim", "3", "--beta1", "1"});
  EXPECT_EQ(r.code, 0) << r.out;
  ASSERT_NE(r.out.find("summary:"), std::string::npos);
  const std::string summary = r.out.substr(r.out.find("summary:"));
  for (const char* suite : {"four-braid", "zdelta", "bform", "coproduct", "inverse", "zbn", "affine", "paper-matrices"})
    EXPECT_NE(summary.find(suite), std::string::npos) << suite;
  EXPECT_NE(summary.find(", 0 failed"), std::string::npos);
}

TEST(Cli, VerifyIsDeterministic) {
  const std::vector<std::string> args = {"verify", "four-braid", "--max-dim", "2", "--beta1", "x^4", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, VerifyReportsFailure) {
  // The affine twist is not a type-B generator for the ordinary braid matrix.
  const Result z = run({"zbn", "--dim", "2", "--strands", "3", "--beta1", "1", "--variant", "affine"});
  EXPECT_EQ(z.code, 1);
  EXPECT_NE(z.out.find("FAIL type-B relation"), std::string::npos) << z.out;
  EXPECT_NE(z.out.find("first difference at"), std::string::npos) << z.out;
  const Result v = run({"verify", "zbn", "--max-dim", "2", "--beta1", "1", "--variant", "affine"});
  EXPECT_EQ(v.code, 1);
  EXPECT_EQ(run({"zbn", "--dim", "2", "--strands", "3", "--beta1", "1"}).code, 0);
}

TEST(Cli, ZbnWordAndGuardrail) {
  const Result w = run({"zbn", "--dim", "2", "--strands", "2", "--word", "1 1'", "--format", "plain"});
  EXPECT_EQ(w.code, 0);
  EXPECT_EQ(w.out, "1  0  0  0\n0  1  0  0\n0  0  1  0\n0  0  0  1\n");
  EXPECT_EQ(run({"zbn", "--dim", "3", "--strands", "6"}).code, 2);
  EXPECT_EQ(run({"zbn", "--dim", "2", "--strands", "9", "--at-q", "0.7"}).code, 0);
}
