#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qweyl/matrix.hpp"
#include "qweyl/report.hpp"

namespace qweyl {

/// A number in (1/2)Z, stored as twice its value.
struct HalfInteger {
  int twice = 0;

  static HalfInteger from_string(std::string_view s);
  std::string to_string() const;
  friend bool operator==(const HalfInteger&, const HalfInteger&) = default;
};

enum class Variant {
  standard,     ///< t = w z
  w_inverse,    ///< t = w^-1 z
  k_conjugate,  ///< t = w K^a z K^a
  u_conjugate,  ///< t = w u z u (the central factor of S(u)^-1 z u dropped)
  affine,       ///< tbar = w^-1 t w
};

Variant parse_variant(std::string_view s);
std::string_view to_string(Variant v);

struct TwistConfig {
  RingElem beta1 = 0;
  Variant variant = Variant::standard;
  HalfInteger alpha{};  ///< only read for k_conjugate
};

/// beta_a, beta'_a = beta_a [a]!, and the coefficients alpha_a of zhat^-1,
/// indexed 0..N.
struct CoeffTable {
  std::vector<RingElem> betas;
  std::vector<RingElem> beta_primes;
  std::vector<RingElem> alphas;
};

/// beta_0 = 1, beta_1 given,
///   beta_{a+1} = (beta_a beta_1 + beta_{a-1} (q^-1 - 1) q^((1-a)/2)) / [a+1];
/// alpha_0 = 1, alpha_a = -sum_{m=1}^{a} beta_m alpha_{a-m} q^(-m(a-m)/2).
CoeffTable beta_coeffs(int n, const RingElem& beta1);

/// The inverse recursion with the shifted index range,
///   alpha_a = -sum_{m=0}^{a-1} alpha_{a-1-m} beta_m q^(-m(a-1-m)/2).
/// It does not invert zhat in general; kept as a negative control.
std::vector<RingElem> shifted_index_alphas(int n, const RingElem& beta1);

/// B_n = (1-q^-1)^n / [n]! q^(n(n-1)/4) (-q^(1/2))^n q^(-n^2/2).
RingElem series_coeff_B(int n);

/// B^{a,b}_n = [a n][b n][n]! q^(-n(a+b)/2) q^(3n/4 + n^2/4) (q^-1 - 1)^n,
/// zero for n < 0.
RingElem bracket_coeff(int a, int b, int n);

/// sum_m c_m q^(-Hm/4) Y^m on V_d.
QMatrix borel_series(int d, std::span<const RingElem> coeffs);

/// zhat = sum_m beta_m q^(-Hm/4) Y^m.
QMatrix zhat(int d, const RingElem& beta1);
/// z = q^(-H^2/8) zhat.
QMatrix z_elem(int d, const RingElem& beta1);
/// zhat^-1 from the alpha recursion.
QMatrix zhat_inverse(int d, const RingElem& beta1);

/// Antidiagonal pi(w): w e_k = omega_k e_{d-1-k},
///   omega_k = -q^(-1/2) [k][d-k] omega_{k-1},
///   omega_0 = q^(-(d-1)^2/8) / [d-1]!.
QMatrix weyl_w(int d);

/// pi(t) for the chosen solution family.
QMatrix twist_t(int d, const TwistConfig& config);

/// Delta(zhat) on V_a (x) V_b from the q-binomial double sum
///   sum_m beta_m sum_i [m i] q^(i(m-i)/2) (q^(-Hm/4) (x) q^(-Hm/4)) (Y(x)K)^i (K^-1(x)Y)^(m-i).
QMatrix coproduct_zhat(int da, int db, const RingElem& beta1);
/// Delta(z) = (q^(-H^2/8) (x) q^(-H^2/8)) q^(-H(x)H/4) Delta(zhat).
QMatrix coproduct_z(int da, int db, const RingElem& beta1);
/// Delta(t) = R^-1 (w (x) w) Delta(z). Only the standard variant.
QMatrix coproduct_t(int da, int db, const TwistConfig& config);

/// R_21 t_2 R t_1 = t_1 R_21 t_2 R on V_a (x) V_b, and for a == b also
/// F_1 B F_1 B = B F_1 B F_1.
Report verify_four_braid(int da, int db, const TwistConfig& config);
/// Same, for explicit twist matrices on V_a and V_b.
Report verify_four_braid(const QMatrix& ta, const QMatrix& tb);

/// Delta(z) = z_2 (w_2 R_21 w_2^-1) z_1, and the zhat equation
///   Delta(zhat) = q^(HH/4)(1(x)zhat)q^(-HH/4) sum_n B_n (q^(-Hn/2)F^n (x) F^n)(zhat(x)1).
Report verify_zdelta(int da, int db, const RingElem& beta1);

/// The coefficient identities: sum_n B^{a,b}_n beta'_{a-n} beta'_{b-n} = beta'_{a+b}
/// for a+b <= max_sum, both index-shift recurrences of B^{a,b}_n for
/// a, b <= max_index, the beta-form coefficient equation, and agreement of
/// the beta and beta' recursions.
Report verify_bform(int max_sum, const RingElem& beta1, int max_index = 6);

/// Delta(t) = R^-1 t_2 R t_1, plus the agreement of the double-sum Delta(zhat)
/// with the direct power expansion of Delta(Y).
Report verify_coproduct(int da, int db, const TwistConfig& config);

/// epsilon(t) = 1, i.e. pi_1(t) = (1).
Report verify_counit(const TwistConfig& config);

/// zhat zhat^-1 = zhat^-1 zhat = 1.
Report verify_zhat_inverse(int d, const RingElem& beta1);
/// Same with the shifted-index alphas; expected to fail when they differ.
Report verify_zhat_inverse_shifted(int d, const RingElem& beta1);

/// Governing identity of a variant: the four-braid equation, or for the
/// affine variant R tbar_2 R_21 tbar_1 = tbar_1 R tbar_2 R_21.
Report verify_variant(int da, int db, const TwistConfig& config);

/// Weyl element relations on V_d: wX = -q^(1/2) Y w, wY = -q^(-1/2) X w,
/// w H w^-1 = -H, w^2 scalar.
Report verify_weyl(int d);
/// (w (x) w) R = R_21 (w (x) w) and conjugated_r = w_2 R_21 w_2^-1.
Report verify_weyl_r(int da, int db);

/// Diagonal change to the symmetric basis: D^-1 t D with D_0 = 1,
/// D_{k+1} = D_k / sqrt([k+1][d-1-k]) at q0.
NumMatrix to_symmetric_basis(const NumMatrix& t, double q0);

/// The published 2-, 3- and 4-dimensional twist matrices (symmetric basis).
NumMatrix published_twist_matrix(int d, double beta1, double q0);

/// Max-abs entrywise residual between the symmetric-basis image of the
/// exact t and the published matrix. Throws std::invalid_argument for
/// d outside {2,3,4} or q0 <= 0 or q0 == 1.
double compare_paper_matrix(int d, double beta1, double q0);

}  // namespace qweyl
