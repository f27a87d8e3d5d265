#include "qweyl/expr_parser.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace qweyl {

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : s_(text) {}

  RingElem parse() {
    RingElem e = expr();
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression error at position " + std::to_string(pos_) + ": " + what + " in \"" +
                                std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  static bool starts_primary(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'x' || c == 'q' || c == '(';
  }

  RingElem expr() {
    RingElem acc = term();
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  RingElem term() {
    RingElem acc = factor();
    for (;;) {
      if (eat('*')) {
        acc *= factor();
      } else if (eat('/')) {
        const RingElem d = factor();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else if (starts_primary(peek())) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  RingElem factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    return power();
  }

  RingElem power() {
    RingElem base = primary();
    if (!eat('^')) return base;
    return raise(base, exponent());
  }

  Rational exponent() {
    int sign = 1;
    for (;;) {
      if (eat('-'))
        sign = -sign;
      else if (!eat('+'))
        break;
    }
    Rational r;
    if (eat('(')) {
      const RingElem e = expr();
      if (!eat(')')) fail("expected ')'");
      if (!e.is_constant()) fail("exponent must be a rational constant");
      r = e.num().is_zero() ? Rational(0) : e.num().coeff(0);
    } else {
      r = number();
    }
    return sign * r;
  }

  RingElem raise(const RingElem& base, const Rational& r) {
    if (r.get_den() == 1) {
      if (!r.get_num().fits_sint_p() || std::abs(r.get_num().get_si()) > 4096) fail("exponent too large");
      const auto n = static_cast<int>(r.get_num().get_si());
      if (n < 0 && base.is_zero()) fail("zero to a negative power");
      return base.pow(n);
    }
    // Fractional power: only x^k with k*r integral stays in the field.
    if (!base.is_laurent() || !base.num().is_monomial() || base.num().leading_coeff() != 1)
      fail("fractional exponent needs a bare power of x or q");
    const Rational e = base.num().min_exp() * r;
    if (e.get_den() != 1) fail("fractional power leaves Q(x^(1/8)) lattice");
    return RingElem::x_pow(static_cast<int>(e.get_num().get_si()));
  }

  Rational number() {
    skip();
    const std::size_t start = pos_;
    std::string digits;
    std::size_t frac = 0;
    bool dot = false;
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
        if (dot) ++frac;
      } else if (c == '.' && !dot) {
        dot = true;
      } else {
        break;
      }
      ++pos_;
    }
    if (digits.empty()) {
      pos_ = start;
      fail("expected a number");
    }
    if (pos_ < s_.size() && (s_[pos_] == '.' || std::isdigit(static_cast<unsigned char>(s_[pos_]))))
      fail("malformed number");
    Rational r(mpz_class(digits, 10));
    if (frac > 0) {
      mpz_class ten_pow;
      mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, frac);
      r /= ten_pow;
    }
    r.canonicalize();
    return r;
  }

  RingElem primary() {
    const char c = peek();
    if (c == 'x') {
      ++pos_;
      return RingElem::x_pow(1);
    }
    if (c == 'q') {
      ++pos_;
      return RingElem::x_pow(8);
    }
    if (c == '(') {
      ++pos_;
      RingElem e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return RingElem(number());
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

RingElem parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace qweyl
