#pragma once

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

#include "qweyl/matrix.hpp"
#include "qweyl/report.hpp"
#include "qweyl/twist.hpp"

namespace qweyl {

/// A word in the generators tau_0..tau_{n-1} of ZB_n.
struct BraidWord {
  struct Letter {
    int generator = 0;
    int power = 1;  ///< +1 or -1
  };
  int strands = 0;
  std::vector<Letter> letters;

  /// Whitespace-separated indices, a trailing ' marks an inverse: "0 1 0' 1".
  /// Throws std::invalid_argument on malformed text or out-of-range indices.
  static BraidWord parse(std::string_view text, int strands);
};

/// Generator matrices of the tensor representation of ZB_n on V_d^(x)n:
///   G_0 = t (x) 1 ... (x) 1,  G_i = 1^(i-1) (x) B (x) 1^(n-i-1).
struct RepBundle {
  int dim = 0;
  int strands = 0;
  QMatrix twist;         ///< t on V_d
  QMatrix braid;         ///< B on V_d (x) V_d
  QMatrix twist_inv;
  QMatrix braid_inv;
  std::vector<QMatrix> generators;

  std::size_t size() const { return generators.empty() ? 0 : generators.front().rows(); }
  /// G_i^-1, assembled from the small inverses.
  QMatrix generator_inverse(int i) const;
};

/// Largest d^n the exact path accepts; 256 unless QW_MAX_EXACT_DIM is set.
std::size_t max_exact_dim();

/// Throws std::length_error if d^n exceeds max_exact_dim().
RepBundle zbn_generators(int d, int n, const TwistConfig& config);
/// Bundle from explicit t and B (used for negative controls).
RepBundle zbn_generators(int d, int n, const QMatrix& twist, const QMatrix& braid);

/// All defining relations of ZB_n: far commutation, Artin braid relation,
/// tau_0 tau_1 tau_0 tau_1 = tau_1 tau_0 tau_1 tau_0, tau_0 tau_i = tau_i tau_0 (i >= 2).
Report verify_zbn_relations(const RepBundle& bundle);
Report verify_zbn_relations(int d, int n, const TwistConfig& config);

/// Ordered product of generators and inverses; the empty word is 1.
QMatrix eval_braid_word(const BraidWord& word, const RepBundle& bundle);

/// (1(x)Fbar) B (1(x)Fbar) B = B (1(x)Fbar) B (1(x)Fbar) on V_d (x) V_d with
/// Fbar = pi(w^-1 t w); only config.beta1 is read.
Report verify_affine_relation(int d, const TwistConfig& config);

/// Floating-point counterpart for sizes beyond the exact guardrail. The
/// small t and B are built exactly and evaluated at q0.
struct NumericBundle {
  int dim = 0;
  int strands = 0;
  std::vector<NumMatrix> generators;
  std::vector<NumMatrix> inverses;
};
NumericBundle zbn_generators_numeric(int d, int n, const TwistConfig& config, std::complex<double> q0);
NumMatrix eval_braid_word(const BraidWord& word, const NumericBundle& bundle);
/// Same relation families; each reports its max-abs residual against tol.
Report verify_zbn_relations(const NumericBundle& bundle, double tol);

}  // namespace qweyl
