// Numeric bridge between the exact integer-basis twist and the published
// square-root-bearing matrices.

#include <cmath>
#include <stdexcept>
#include <string>

#include "qweyl/twist.hpp"

namespace qweyl {

namespace {

double qint_at(int n, double q) { return (std::pow(q, n / 2.0) - std::pow(q, -n / 2.0)) / (std::sqrt(q) - 1 / std::sqrt(q)); }

}  // namespace

NumMatrix to_symmetric_basis(const NumMatrix& t, double q0) {
  const Eigen::Index d = t.rows();
  Eigen::VectorXcd scale(d);
  scale(0) = 1.0;
  for (Eigen::Index k = 0; k + 1 < d; ++k) {
    const double bracket = qint_at(static_cast<int>(k) + 1, q0) * qint_at(static_cast<int>(d - 1 - k), q0);
    scale(k + 1) = scale(k) / std::sqrt(bracket);
  }
  return scale.cwiseInverse().asDiagonal() * t * scale.asDiagonal();
}

NumMatrix published_twist_matrix(int d, double b, double q) {
  const auto p = [q](double e) { return std::pow(q, e); };
  NumMatrix m = NumMatrix::Zero(d, d);
  switch (d) {
    case 2:
      m << -b * p(-0.5), -p(-0.75),
           p(-0.25), 0;
      return m;
    case 3: {
      const double s = std::sqrt(q + 1);
      m << (1 - q + q * b * b) / (q * q), p(-1.75) * s * b, p(-2),
           -p(-1.25) * b * s, -1 / q, 0,
           1 / q, 0, 0;
      return m;
    }
    case 4: {
      const double g = std::sqrt(1 + q + q * q);
      m << -p(-3.5) * b * (1 + q - 2 * q * q + q * q * b * b), p(-3.75) * g * (q - 1 - q * b * b), -p(-3.5) * g * b, -p(-3.75),
           p(-3.25) * g * (1 - q + q * b * b), p(-2.5) * (1 + q) * b, p(-2.25), 0,
           -p(-2.5) * g * b, -p(-1.75), 0, 0,
           p(-2.25), 0, 0, 0;
      return m;
    }
    default:
      throw std::invalid_argument("published twist matrices exist for d = 2, 3, 4 only, got " + std::to_string(d));
  }
}

double compare_paper_matrix(int d, double beta1, double q0) {
  if (d < 2 || d > 4) throw std::invalid_argument("compare_paper_matrix needs d in {2,3,4}, got " + std::to_string(d));
  if (!(q0 > 0) || q0 == 1) throw std::invalid_argument("compare_paper_matrix needs q0 > 0, q0 != 1");
  TwistConfig config;
  config.beta1 = RingElem(Rational(beta1));
  const NumMatrix t = evaluate(twist_t(d, config), q0);
  const NumMatrix diff = to_symmetric_basis(t, q0) - published_twist_matrix(d, beta1, q0);
  return diff.cwiseAbs().maxCoeff();
}

}  // namespace qweyl
