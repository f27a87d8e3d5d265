#include "qweyl/ring_elem.hpp"

#include <sstream>
#include <stdexcept>

namespace qweyl {

RingElem RingElem::canonical(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw std::domain_error("division by zero in Q(x)");
  if (num.is_zero()) return {};
  const int shift = den.min_exp();
  if (shift != 0) {
    num = num.shifted(-shift);
    den = den.shifted(-shift);
  }
  if (den.is_constant()) return RingElem(num.scaled(1 / den.leading_coeff()), LaurentPoly(1), 0);
  LaurentPoly g = poly_gcd(num, den);
  if (!g.is_one()) {
    num = divide_exact(num, g);
    den = divide_exact(den, g);
  }
  if (den.leading_coeff() != 1) {
    Rational lead = den.leading_coeff();
    num = num.scaled(1 / lead);
    den = den.scaled(1 / lead);
  }
  return RingElem(std::move(num), std::move(den), 0);
}

RingElem RingElem::fraction(LaurentPoly num, LaurentPoly den) {
  return canonical(std::move(num), std::move(den));
}

RingElem RingElem::operator-() const { return RingElem(-num_, den_, 0); }

RingElem& RingElem::operator+=(const RingElem& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) return *this = canonical(num_ + o.num_, den_);
  LaurentPoly g = poly_gcd(den_, o.den_);
  if (g.is_one()) {
    // Coprime denominators: the Henrici sum is already reduced.
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (num_.is_zero()) den_ = 1;
    return *this;
  }
  LaurentPoly mine = divide_exact(den_, g);
  LaurentPoly theirs = divide_exact(o.den_, g);
  LaurentPoly n = num_ * theirs + o.num_ * mine;
  LaurentPoly d = den_ * theirs;
  return *this = canonical(std::move(n), std::move(d));
}

RingElem& RingElem::operator-=(const RingElem& o) { return *this += -o; }

RingElem& RingElem::operator*=(const RingElem& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RingElem();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  LaurentPoly a = num_;
  LaurentPoly b = den_;
  LaurentPoly c = o.num_;
  LaurentPoly d = o.den_;
  if (!d.is_one()) {
    LaurentPoly g = poly_gcd(a, d);
    if (!g.is_one()) {
      a = divide_exact(a, g);
      d = divide_exact(d, g);
    }
  }
  if (!b.is_one()) {
    LaurentPoly g = poly_gcd(c, b);
    if (!g.is_one()) {
      c = divide_exact(c, g);
      b = divide_exact(b, g);
    }
  }
  num_ = a * c;
  den_ = b * d;
  return *this;
}

RingElem& RingElem::operator/=(const RingElem& o) { return *this *= o.inverse(); }

RingElem RingElem::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(x)");
  const int shift = num_.min_exp();
  const Rational lead = num_.leading_coeff();
  return RingElem(den_.shifted(-shift).scaled(1 / lead), num_.shifted(-shift).scaled(1 / lead), 0);
}

RingElem RingElem::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RingElem result = 1;
  RingElem base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

std::complex<double> eighth_root(std::complex<double> q0) {
  if (q0 == std::complex<double>(0.0)) throw std::domain_error("sample point q0 = 0 is not allowed");
  return std::pow(q0, 0.125);
}

std::complex<double> RingElem::evaluate_at_x(std::complex<double> x) const {
  const std::complex<double> d = den_.evaluate(x);
  if (std::abs(d) <= 1e-13 * den_.magnitude_bound(x)) {
    std::ostringstream os;
    os << "denominator " << den_.to_string() << " vanishes at x = " << x;
    throw std::domain_error(os.str());
  }
  return num_.evaluate(x) / d;
}

std::complex<double> RingElem::evaluate(std::complex<double> q0) const {
  try {
    return evaluate_at_x(eighth_root(q0));
  } catch (const std::domain_error& e) {
    std::ostringstream os;
    os << e.what() << " (sample point q0 = " << q0 << ")";
    throw std::domain_error(os.str());
  }
}

std::string RingElem::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qweyl
