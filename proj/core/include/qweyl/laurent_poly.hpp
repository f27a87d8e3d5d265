#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qweyl {

using Rational = mpq_class;

/// Laurent polynomial in one variable x with exact rational coefficients.
///
/// Terms are kept sorted by exponent, strictly increasing, and no stored
/// coefficient is zero. The zero polynomial has no terms.
class LaurentPoly {
public:
  struct Term {
    int exp;
    Rational coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  LaurentPoly(int c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  /// Builds from arbitrary (unsorted, possibly repeated or zero) terms.
  static LaurentPoly from_terms(std::vector<Term> terms);
  static LaurentPoly monomial(int exp, const Rational& coeff = 1);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  /// Zero or a nonzero constant.
  bool is_constant() const noexcept;

  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Lowest and highest exponents; undefined for the zero polynomial.
  int min_exp() const { return terms_.front().exp; }
  int max_exp() const { return terms_.back().exp; }
  const Rational& leading_coeff() const { return terms_.back().coeff; }
  const Rational& trailing_coeff() const { return terms_.front().coeff; }
  Rational coeff(int exp) const;

  /// Multiplies by x^k.
  LaurentPoly shifted(int k) const;
  LaurentPoly scaled(const Rational& c) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::complex<double> evaluate(std::complex<double> x) const;
  /// Sum of |c|*|x|^e; the scale against which a numeric zero is judged.
  double magnitude_bound(std::complex<double> x) const;

  /// Human-readable form in x, e.g. "x^4 + x^-4".
  std::string to_string() const;

private:
  std::vector<Term> terms_;
};

/// Exact quotient a / b. Throws std::domain_error if b is zero or does not
/// divide a in the Laurent ring.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Monic gcd in Q[x] of the polynomial parts of a and b (monomial factors
/// are discarded, so the result has a nonzero constant term). gcd(0, 0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace qweyl
