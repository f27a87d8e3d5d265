#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qweyl/ring_elem.hpp"

namespace qweyl {

/// Dense row-major matrix over Q(x).
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix diagonal(const std::vector<RingElem>& d);
  static QMatrix from_rows(const std::vector<std::vector<RingElem>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  RingElem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const RingElem& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_diagonal() const;
  /// Number of nonzero entries.
  std::size_t nonzeros() const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix scaled(const RingElem& c) const;
  QMatrix operator-() const { return scaled(-1); }

  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const RingElem& c, const QMatrix& m) { return m.scaled(c); }
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RingElem> a_;
};

/// Kronecker product; (i (x) j) has index i * cols(B) + j.
QMatrix kron(const QMatrix& a, const QMatrix& b);

/// a^n for n >= 0.
QMatrix matrix_pow(const QMatrix& a, int n);

/// Exact inverse by Gauss-Jordan elimination. Throws std::domain_error if
/// the matrix is singular or not square.
QMatrix inverse(const QMatrix& a);

/// First entry (in row-major order) where two equally shaped matrices differ.
struct Mismatch {
  std::size_t row = 0;
  std::size_t col = 0;
  RingElem lhs;
  RingElem rhs;
};
std::optional<Mismatch> first_difference(const QMatrix& a, const QMatrix& b);

using NumMatrix = Eigen::MatrixXcd;

/// Entrywise evaluation at q0 (x <- principal q0^(1/8)).
NumMatrix evaluate(const QMatrix& m, std::complex<double> q0);

NumMatrix num_kron(const NumMatrix& a, const NumMatrix& b);

}  // namespace qweyl
