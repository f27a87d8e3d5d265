#include <stdexcept>
#include <string>

#include "qweyl/qring.hpp"

namespace qweyl {

RingElem q_power(const Rational& r) {
  Rational scaled = r * 8;
  scaled.canonicalize();
  if (scaled.get_den() != 1)
    throw std::invalid_argument("q^" + r.get_str() + " is not an integral power of x = q^(1/8)");
  if (!scaled.get_num().fits_sint_p()) throw std::invalid_argument("exponent out of range");
  return RingElem::x_pow(static_cast<int>(scaled.get_num().get_si()));
}

RingElem q_power(int num, int den) {
  if (den == 0) throw std::invalid_argument("zero denominator in q exponent");
  return q_power(Rational(num, den));
}

RingElem q_int(int n) {
  if (n < 0) return -q_int(-n);
  std::vector<LaurentPoly::Term> terms;
  for (int e = -4 * (n - 1); e <= 4 * (n - 1); e += 8) terms.push_back({e, 1});
  return RingElem(LaurentPoly::from_terms(std::move(terms)));
}

RingElem q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial of negative " + std::to_string(n));
  RingElem f = 1;
  for (int i = 2; i <= n; ++i) f *= q_int(i);
  return f;
}

RingElem q_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  // Product form [n][n-1]...[n-k+1] / [k]! keeps the operands small.
  RingElem num = 1;
  for (int i = 0; i < k; ++i) num *= q_int(n - i);
  return num / q_factorial(k);
}

}  // namespace qweyl
