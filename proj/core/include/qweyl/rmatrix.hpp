#pragma once

#include "qweyl/matrix.hpp"
#include "qweyl/report.hpp"

namespace qweyl {

/// Coefficient (1 - q^-1)^n / [n]! * q^(n(n-1)/4) of E^n (x) F^n in R.
RingElem r_series_coeff(int n);

/// (pi_a (x) pi_b) R = q^(H(x)H/4) sum_n c_n E^n (x) F^n, truncated at
/// n = min(a, b) - 1 by nilpotency.
QMatrix r_matrix(int da, int db);

/// R_21 acting on V_a (x) V_b, i.e. P (pi_b (x) pi_a)(R) P.
QMatrix r21_matrix(int da, int db);

/// R, its exact inverse and R_21 on one pair of irreps.
struct RFamily {
  int da = 0;
  int db = 0;
  QMatrix R;
  QMatrix Rinv;
  QMatrix R21;
};
RFamily r_family(int da, int db);

/// B = P (pi (x) pi) R on V_d (x) V_d.
QMatrix braid_matrix(int d);

/// w_2 R_21 w_2^-1 from its closed form
///   q^(-H(x)H/4) sum_n c_n (-q^(1/2))^n F^n (x) F^n.
QMatrix conjugated_r(int da, int db);

/// pi(u) for u = sum_k S(beta_k) alpha_k, R = sum_k alpha_k (x) beta_k.
/// Throws std::logic_error if the result is singular.
QMatrix drinfeld_u(int d);

/// R_12 R_13 R_23 = R_23 R_13 R_12 on V_a (x) V_b (x) V_c.
Report verify_yang_baxter(int da, int db, int dc);

/// R Delta(g) = Delta'(g) R for g in {H, X, Y, K}.
Report verify_intertwiner(int da, int db);

/// pi(u) pi(g) pi(u)^-1 = pi(S^2(g)): S^2(X) = qX, S^2(Y) = q^-1 Y,
/// S^2(H) = H, S^2(K) = K.
Report verify_drinfeld_u(int d);

}  // namespace qweyl
