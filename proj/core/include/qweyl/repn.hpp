#pragma once

#include <functional>
#include <vector>

#include "qweyl/matrix.hpp"

namespace qweyl {

/// Irreducible d-dimensional representation of U_q(sl2) in the integer
/// weight basis e_0..e_{d-1}, ordered by decreasing weight:
///   H e_k = (d-1-2k) e_k,  Y e_k = e_{k+1},  X e_k = [k][d-k] e_{k-1},
///   K = q^(H/4),  E = K X,  F = K^-1 Y.
struct IrrepSpec {
  int dim = 0;
  std::vector<int> weights;
  QMatrix H, X, Y, E, F, K, Kinv;
};

/// Throws std::invalid_argument for d < 1.
IrrepSpec irrep(int d);

/// Weight of basis vector e_k in V_d.
inline int weight_of(int d, int k) { return d - 1 - 2 * k; }

/// Diagonal idempotent onto the weight-m space of V_d (zero if m is absent).
QMatrix weight_projector(int d, int m);

/// f(H) on V_d for a function of the weight.
QMatrix function_of_h(int d, const std::function<RingElem(int)>& f);

/// f(H (x) 1, 1 (x) H) on V_a (x) V_b.
QMatrix function_of_hh(int da, int db, const std::function<RingElem(int, int)>& f);

/// q^(c * H(x)H / 4) on V_a (x) V_b, assembled as sum of x^(2c m m') P_m (x) P_m'.
QMatrix cartan_factor(int da, int db, int c = 1);

/// Flip V_a (x) V_b -> V_b (x) V_a.
QMatrix flip(int da, int db);

enum class Generator { H, X, Y, K };

/// (pi_a (x) pi_b) Delta(g) with Delta(X) = X(x)K + K^-1(x)X,
/// Delta(Y) = Y(x)K + K^-1(x)Y, Delta(H) = H(x)1 + 1(x)H, Delta(K) = K(x)K.
QMatrix coproduct(Generator g, int da, int db);

/// The opposite coproduct Delta'(g) = P Delta(g) P on V_a (x) V_b.
QMatrix coproduct_op(Generator g, int da, int db);

/// Generator matrix of an irrep.
const QMatrix& generator_matrix(const IrrepSpec& rep, Generator g);

}  // namespace qweyl
