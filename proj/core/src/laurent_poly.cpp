#include "qweyl/laurent_poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qweyl {

namespace {

// Dense polynomial in y, index = degree; no trailing zeros except for the
// zero polynomial, which is empty.
using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Common exponent stride of the polynomial parts (after shifting each to a
// zero lowest exponent). Returns 0 when both are constants.
int common_stride(const LaurentPoly& a, const LaurentPoly& b) {
  int s = 0;
  for (const auto& t : a.terms()) s = std::gcd(s, t.exp - a.min_exp());
  for (const auto& t : b.terms()) s = std::gcd(s, t.exp - b.min_exp());
  return s;
}

Dense to_dense(const LaurentPoly& p, int stride) {
  Dense d(static_cast<std::size_t>((p.max_exp() - p.min_exp()) / stride) + 1);
  for (const auto& t : p.terms()) d[static_cast<std::size_t>((t.exp - p.min_exp()) / stride)] = t.coeff;
  return d;
}

LaurentPoly from_dense(const Dense& d, int stride, int offset) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    if (sgn(d[i]) != 0) terms.push_back({static_cast<int>(i) * stride + offset, d[i]});
  return LaurentPoly::from_terms(std::move(terms));
}

// a = q*b + r with deg r < deg b; b nonzero.
void divmod(Dense a, const Dense& b, Dense& q, Dense& r) {
  const std::size_t m = b.size() - 1;
  q.assign(a.size() >= b.size() ? a.size() - m : 0, Rational(0));
  const Rational& lead = b.back();
  for (std::size_t k = a.size(); k-- > m;) {
    if (sgn(a[k]) == 0) continue;
    Rational c = a[k] / lead;
    q[k - m] = c;
    for (std::size_t j = 0; j <= m; ++j) a[k - m + j] -= c * b[j];
  }
  a.resize(std::min(a.size(), m));
  trim(a);
  r = std::move(a);
}

void make_monic(Dense& p) {
  if (p.empty()) return;
  Rational lead = p.back();
  if (lead == 1) return;
  for (auto& c : p) c /= lead;
}

}  // namespace

LaurentPoly::LaurentPoly(int c) {
  if (c != 0) terms_.push_back({0, Rational(c)});
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.push_back({0, c});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& l, const Term& r) { return l.exp < r.exp; });
  LaurentPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coeff += t.coeff;
      if (sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
    } else if (sgn(t.coeff) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

LaurentPoly LaurentPoly::monomial(int exp, const Rational& coeff) {
  LaurentPoly p;
  if (sgn(coeff) != 0) p.terms_.push_back({exp, coeff});
  return p;
}

bool LaurentPoly::is_one() const noexcept {
  return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coeff == 1;
}

bool LaurentPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0);
}

Rational LaurentPoly::coeff(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, int e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == exp) return it->coeff;
  return 0;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.exp += k;
  return p;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (sgn(c) == 0) return {};
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->exp < j->exp)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->exp < i->exp) {
      out.push_back(*j++);
    } else {
      Rational c = i->coeff + j->coeff;
      if (sgn(c) != 0) out.push_back({i->exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_monomial()) return a.scaled(b.terms_[0].coeff).shifted(b.terms_[0].exp);
  if (a.is_monomial()) return b.scaled(a.terms_[0].coeff).shifted(a.terms_[0].exp);
  std::vector<LaurentPoly::Term> prods;
  prods.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prods.push_back({s.exp + t.exp, s.coeff * t.coeff});
  return LaurentPoly::from_terms(std::move(prods));
}

std::complex<double> LaurentPoly::evaluate(std::complex<double> x) const {
  std::complex<double> sum = 0.0;
  for (const auto& t : terms_) sum += t.coeff.get_d() * std::pow(x, t.exp);
  return sum;
}

double LaurentPoly::magnitude_bound(std::complex<double> x) const {
  double sum = 0.0;
  const double r = std::abs(x);
  for (const auto& t : terms_) sum += std::abs(t.coeff.get_d()) * std::pow(r, t.exp);
  return sum;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->coeff;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    c = abs(c);
    first = false;
    if (it->exp == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << "x";
    if (it->exp != 1) os << "^" << it->exp;
  }
  return os.str();
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
  if (a.is_zero()) return {};
  if (b.is_monomial()) return a.scaled(1 / b.leading_coeff()).shifted(-b.min_exp());
  const int stride = common_stride(a, b);
  if (stride == 0) throw std::domain_error("inexact Laurent division");
  Dense q, r;
  divmod(to_dense(a, stride), to_dense(b, stride), q, r);
  if (!r.empty()) throw std::domain_error("inexact Laurent division");
  return from_dense(q, stride, a.min_exp() - b.min_exp());
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero() || b.is_zero()) {
    const LaurentPoly& p = a.is_zero() ? b : a;
    return p.shifted(-p.min_exp()).scaled(1 / p.leading_coeff());
  }
  if (a.is_monomial() || b.is_monomial()) return 1;
  const int stride = common_stride(a, b);
  if (stride == 0) return 1;
  Dense u = to_dense(a, stride);
  Dense v = to_dense(b, stride);
  if (u.size() < v.size()) std::swap(u, v);
  make_monic(v);
  Dense q, r;
  while (!v.empty()) {
    if (v.size() == 1) return 1;
    divmod(std::move(u), v, q, r);
    u = std::move(v);
    v = std::move(r);
    make_monic(v);
  }
  make_monic(u);
  return from_dense(u, stride, 0);
}

}  // namespace qweyl
