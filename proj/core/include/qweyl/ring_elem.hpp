#pragma once

#include <complex>
#include <string>

#include "qweyl/laurent_poly.hpp"

namespace qweyl {

/// Element of Q(x), where x stands for q^(1/8).
///
/// Always stored in canonical form: the denominator is a polynomial in x with
/// nonzero constant term and leading coefficient 1, and it is coprime to the
/// numerator. Canonical forms are equal iff the field elements are equal.
class RingElem {
public:
  RingElem() : den_(1) {}
  RingElem(int c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RingElem(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RingElem(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)

  /// num / den in canonical form; throws std::domain_error if den is zero.
  static RingElem fraction(LaurentPoly num, LaurentPoly den);
  /// x^k, i.e. q^(k/8).
  static RingElem x_pow(int k) { return RingElem(LaurentPoly::monomial(k)); }

  const LaurentPoly& num() const noexcept { return num_; }
  const LaurentPoly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  /// True when the denominator is 1.
  bool is_laurent() const noexcept { return den_.is_one(); }
  bool is_constant() const noexcept { return den_.is_one() && num_.is_constant(); }

  RingElem operator-() const;
  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o);
  RingElem& operator*=(const RingElem& o);
  RingElem& operator/=(const RingElem& o);

  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(RingElem a, const RingElem& b) { return a *= b; }
  friend RingElem operator/(RingElem a, const RingElem& b) { return a /= b; }
  friend bool operator==(const RingElem&, const RingElem&) = default;

  /// Multiplicative inverse; throws std::domain_error on zero.
  RingElem inverse() const;
  /// Integer power; negative powers invert.
  RingElem pow(int n) const;

  /// Substitutes x <- principal q0^(1/8). Throws std::domain_error if q0 is
  /// zero or the denominator vanishes there.
  std::complex<double> evaluate(std::complex<double> q0) const;
  /// Same, given x directly.
  std::complex<double> evaluate_at_x(std::complex<double> x) const;

  /// Human-readable form in x.
  std::string to_string() const;

private:
  RingElem(LaurentPoly num, LaurentPoly den, int) : num_(std::move(num)), den_(std::move(den)) {}
  static RingElem canonical(LaurentPoly num, LaurentPoly den);

  LaurentPoly num_;
  LaurentPoly den_;
};

/// Principal eighth root of q0.
std::complex<double> eighth_root(std::complex<double> q0);

}  // namespace qweyl
