#include "qweyl/matrix.hpp"

#include <stdexcept>

namespace qweyl {

namespace {

void require_same_shape(const QMatrix& a, const QMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string("shape mismatch in matrix ") + op);
}

std::size_t weight(const RingElem& e) { return e.num().size() + e.den().size(); }

}  // namespace

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::diagonal(const std::vector<RingElem>& d) {
  QMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<RingElem>>& rows) {
  if (rows.empty()) return {};
  QMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool QMatrix::is_zero() const {
  for (const auto& e : a_)
    if (!e.is_zero()) return false;
  return true;
}

bool QMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

std::size_t QMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& e : a_) n += e.is_zero() ? 0 : 1;
  return n;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  require_same_shape(*this, o, "addition");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  require_same_shape(*this, o, "subtraction");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

QMatrix QMatrix::scaled(const RingElem& c) const {
  QMatrix m = *this;
  if (c.is_one()) return m;
  for (auto& e : m.a_)
    if (!e.is_zero()) e *= c;
  return m;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch in matrix product");
  QMatrix c(a.rows(), b.cols());
  // Representation operators are sparse; skip structural zeros.
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const RingElem& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const RingElem& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

QMatrix kron(const QMatrix& a, const QMatrix& b) {
  QMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const RingElem& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const RingElem& bkl = b(k, l);
          if (bkl.is_zero()) continue;
          c(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
        }
    }
  return c;
}

QMatrix matrix_pow(const QMatrix& a, int n) {
  if (!a.is_square()) throw std::invalid_argument("matrix_pow of non-square matrix");
  if (n < 0) throw std::invalid_argument("matrix_pow with negative exponent");
  QMatrix result = QMatrix::identity(a.rows());
  for (int i = 0; i < n; ++i) result = result * a;
  return result;
}

QMatrix inverse(const QMatrix& a) {
  if (!a.is_square()) throw std::domain_error("inverse of non-square matrix");
  const std::size_t n = a.rows();
  QMatrix m = a;
  QMatrix inv = QMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      if (pivot == n || weight(m(r, col)) < weight(m(pivot, col))) pivot = r;
    }
    if (pivot == n) throw std::domain_error("matrix is singular over Q(x)");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const RingElem p = m(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (!m(col, j).is_zero()) m(col, j) *= p;
      if (!inv(col, j).is_zero()) inv(col, j) *= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col).is_zero()) continue;
      const RingElem f = m(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!m(col, j).is_zero()) m(r, j) -= f * m(col, j);
        if (!inv(col, j).is_zero()) inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::optional<Mismatch> first_difference(const QMatrix& a, const QMatrix& b) {
  require_same_shape(a, b, "comparison");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return Mismatch{i, j, a(i, j), b(i, j)};
  return std::nullopt;
}

NumMatrix evaluate(const QMatrix& m, std::complex<double> q0) {
  NumMatrix out = NumMatrix::Zero(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero())
        out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).evaluate(q0);
  return out;
}

NumMatrix num_kron(const NumMatrix& a, const NumMatrix& b) {
  NumMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      c.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return c;
}

}  // namespace qweyl
