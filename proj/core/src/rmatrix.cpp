#include "qweyl/rmatrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "qweyl/qring.hpp"
#include "qweyl/repn.hpp"

namespace qweyl {

RingElem r_series_coeff(int n) {
  const RingElem one_minus_qinv = 1 - q_power(-1);
  return one_minus_qinv.pow(n) / q_factorial(n) * q_power(n * (n - 1), 4);
}

QMatrix r_matrix(int da, int db) {
  const IrrepSpec a = irrep(da);
  const IrrepSpec b = irrep(db);
  const auto size = static_cast<std::size_t>(da * db);
  QMatrix series(size, size);
  QMatrix en = QMatrix::identity(a.E.rows());
  QMatrix fn = QMatrix::identity(b.F.rows());
  for (int n = 0; n < std::min(da, db); ++n) {
    series += kron(en, fn).scaled(r_series_coeff(n));
    en = en * a.E;
    fn = fn * b.F;
  }
  return cartan_factor(da, db) * series;
}

QMatrix r21_matrix(int da, int db) { return flip(db, da) * r_matrix(db, da) * flip(da, db); }

RFamily r_family(int da, int db) {
  RFamily f;
  f.da = da;
  f.db = db;
  f.R = r_matrix(da, db);
  f.Rinv = inverse(f.R);
  f.R21 = r21_matrix(da, db);
  return f;
}

QMatrix braid_matrix(int d) { return flip(d, d) * r_matrix(d, d); }

QMatrix conjugated_r(int da, int db) {
  const IrrepSpec a = irrep(da);
  const IrrepSpec b = irrep(db);
  const auto size = static_cast<std::size_t>(da * db);
  const RingElem minus_sqrt_q = -q_power(1, 2);
  QMatrix series(size, size);
  QMatrix fa = QMatrix::identity(a.F.rows());
  QMatrix fb = QMatrix::identity(b.F.rows());
  for (int n = 0; n < std::min(da, db); ++n) {
    series += kron(fa, fb).scaled(r_series_coeff(n) * minus_sqrt_q.pow(n));
    fa = fa * a.F;
    fb = fb * b.F;
  }
  return cartan_factor(da, db, -1) * series;
}

QMatrix drinfeld_u(int d) {
  // R = sum_{m,m',n} c_n (x^(2mm') P_m E^n) (x) (P_m' F^n). The antipode is an
  // anti-homomorphism with S(P_m') = P_-m' and S(F) = S(Y) S(K^-1) = -q^(-1/2) Y K.
  const IrrepSpec rep = irrep(d);
  const auto n = static_cast<std::size_t>(d);
  const QMatrix s_f = (rep.Y * rep.K).scaled(-q_power(-1, 2));
  QMatrix u(n, n);
  QMatrix en = QMatrix::identity(n);
  QMatrix s_fn = QMatrix::identity(n);
  for (int k = 0; k < d; ++k) {
    const RingElem c = r_series_coeff(k);
    for (int m = -(d - 1); m <= d - 1; m += 2) {
      const QMatrix alpha = weight_projector(d, m) * en;
      for (int mp = -(d - 1); mp <= d - 1; mp += 2) {
        const QMatrix s_beta = s_fn * weight_projector(d, -mp);
        u += (s_beta * alpha).scaled(c * RingElem::x_pow(2 * m * mp));
      }
    }
    en = en * rep.E;
    s_fn = s_fn * s_f;
  }
  try {
    (void)inverse(u);
  } catch (const std::domain_error&) {
    throw std::logic_error("Drinfeld element is singular: antipode convention mismatch");
  }
  return u;
}

}  // namespace qweyl

namespace qweyl {

Report verify_yang_baxter(int da, int db, int dc) {
  Report report;
  report.suite = "yang-baxter";
  const QMatrix ia = QMatrix::identity(static_cast<std::size_t>(da));
  const QMatrix ic = QMatrix::identity(static_cast<std::size_t>(dc));
  const QMatrix ib = QMatrix::identity(static_cast<std::size_t>(db));
  const QMatrix r12 = kron(r_matrix(da, db), ic);
  const QMatrix r23 = kron(ia, r_matrix(db, dc));
  const QMatrix r13 = kron(ia, flip(dc, db)) * kron(r_matrix(da, dc), ib) * kron(ia, flip(db, dc));
  report.add(compare_exact("R12 R13 R23 = R23 R13 R12 on (" + std::to_string(da) + "," + std::to_string(db) + "," +
                               std::to_string(dc) + ")",
                           r12 * r13 * r23, r23 * r13 * r12));
  return report;
}

Report verify_intertwiner(int da, int db) {
  Report report;
  report.suite = "intertwiner";
  const QMatrix r = r_matrix(da, db);
  const std::string on = " on (" + std::to_string(da) + "," + std::to_string(db) + ")";
  const std::pair<Generator, const char*> gens[] = {
      {Generator::H, "H"}, {Generator::X, "X"}, {Generator::Y, "Y"}, {Generator::K, "K"}};
  for (const auto& [g, name] : gens)
    report.add(compare_exact(std::string("R Delta(") + name + ") = Delta'(" + name + ") R" + on,
                             r * coproduct(g, da, db), coproduct_op(g, da, db) * r));
  return report;
}

Report verify_drinfeld_u(int d) {
  Report report;
  report.suite = "drinfeld-u";
  const IrrepSpec rep = irrep(d);
  const QMatrix u = drinfeld_u(d);
  const QMatrix uinv = inverse(u);
  const std::string on = " on V_" + std::to_string(d);
  report.add(compare_exact("u X u^-1 = q X" + on, u * rep.X * uinv, rep.X.scaled(q_power(1))));
  report.add(compare_exact("u Y u^-1 = q^-1 Y" + on, u * rep.Y * uinv, rep.Y.scaled(q_power(-1))));
  report.add(compare_exact("u H u^-1 = H" + on, u * rep.H * uinv, rep.H));
  report.add(compare_exact("u K u^-1 = K" + on, u * rep.K * uinv, rep.K));
  return report;
}

}  // namespace qweyl
