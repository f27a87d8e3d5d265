#include "qweyl/repn.hpp"

#include <stdexcept>
#include <string>

#include "qweyl/qring.hpp"

namespace qweyl {

IrrepSpec irrep(int d) {
  if (d < 1) throw std::invalid_argument("irrep dimension must be positive, got " + std::to_string(d));
  const auto n = static_cast<std::size_t>(d);
  IrrepSpec rep;
  rep.dim = d;
  rep.H = QMatrix(n, n);
  rep.X = QMatrix(n, n);
  rep.Y = QMatrix(n, n);
  rep.K = QMatrix(n, n);
  rep.Kinv = QMatrix(n, n);
  for (int k = 0; k < d; ++k) {
    const auto i = static_cast<std::size_t>(k);
    const int m = weight_of(d, k);
    rep.weights.push_back(m);
    rep.H(i, i) = m;
    rep.K(i, i) = RingElem::x_pow(2 * m);
    rep.Kinv(i, i) = RingElem::x_pow(-2 * m);
    if (k + 1 < d) rep.Y(i + 1, i) = 1;
    if (k > 0) rep.X(i - 1, i) = q_int(k) * q_int(d - k);
  }
  rep.E = rep.K * rep.X;
  rep.F = rep.Kinv * rep.Y;
  return rep;
}

QMatrix weight_projector(int d, int m) {
  return function_of_h(d, [m](int w) { return RingElem(w == m ? 1 : 0); });
}

QMatrix function_of_h(int d, const std::function<RingElem(int)>& f) {
  std::vector<RingElem> diag;
  for (int k = 0; k < d; ++k) diag.push_back(f(weight_of(d, k)));
  return QMatrix::diagonal(diag);
}

QMatrix function_of_hh(int da, int db, const std::function<RingElem(int, int)>& f) {
  std::vector<RingElem> diag;
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) diag.push_back(f(weight_of(da, i), weight_of(db, j)));
  return QMatrix::diagonal(diag);
}

QMatrix cartan_factor(int da, int db, int c) {
  const auto n = static_cast<std::size_t>(da * db);
  QMatrix out(n, n);
  for (int m = -(da - 1); m <= da - 1; m += 2)
    for (int mp = -(db - 1); mp <= db - 1; mp += 2)
      out += kron(weight_projector(da, m), weight_projector(db, mp)).scaled(RingElem::x_pow(2 * c * m * mp));
  return out;
}

QMatrix flip(int da, int db) {
  const auto a = static_cast<std::size_t>(da);
  const auto b = static_cast<std::size_t>(db);
  QMatrix p(a * b, a * b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) p(j * a + i, i * b + j) = 1;
  return p;
}

const QMatrix& generator_matrix(const IrrepSpec& rep, Generator g) {
  switch (g) {
    case Generator::H: return rep.H;
    case Generator::X: return rep.X;
    case Generator::Y: return rep.Y;
    case Generator::K: return rep.K;
  }
  throw std::invalid_argument("unknown generator");
}

QMatrix coproduct(Generator g, int da, int db) {
  const IrrepSpec a = irrep(da);
  const IrrepSpec b = irrep(db);
  const QMatrix ia = QMatrix::identity(a.H.rows());
  const QMatrix ib = QMatrix::identity(b.H.rows());
  switch (g) {
    case Generator::H: return kron(a.H, ib) + kron(ia, b.H);
    case Generator::X: return kron(a.X, b.K) + kron(a.Kinv, b.X);
    case Generator::Y: return kron(a.Y, b.K) + kron(a.Kinv, b.Y);
    case Generator::K: return kron(a.K, b.K);
  }
  throw std::invalid_argument("unknown generator");
}

QMatrix coproduct_op(Generator g, int da, int db) {
  return flip(db, da) * coproduct(g, db, da) * flip(da, db);
}

}  // namespace qweyl
