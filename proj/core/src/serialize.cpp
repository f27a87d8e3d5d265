#include "qweyl/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace qweyl {

using nlohmann::json;

namespace {

json poly_json(const LaurentPoly& p) {
  json arr = json::array();
  for (const auto& t : p.terms()) arr.push_back(json::array({t.exp, t.coeff.get_str()}));
  return arr;
}

json elem_json(const RingElem& e) { return json{{"num", poly_json(e.num())}, {"den", poly_json(e.den())}}; }

Rational parse_rational(const std::string& s) {
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

LaurentPoly poly_from(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of [exp, \"p/q\"] pairs");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string())
      throw std::invalid_argument("term must be [exp, \"p/q\"], got " + t.dump());
    terms.push_back({t[0].get<int>(), parse_rational(t[1].get<std::string>())});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

RingElem elem_from(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw std::invalid_argument("RingElem must be an object with \"num\" and \"den\"");
  LaurentPoly den = poly_from(j.at("den"));
  if (den.is_zero()) throw std::invalid_argument("RingElem denominator is zero");
  return RingElem::fraction(poly_from(j.at("num")), std::move(den));
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
}

struct Notation {
  bool latex;
};

// |c| q^{e/8} with the sign handled by the caller.
std::string q_monomial(int exp, const Notation& n) {
  const int g = std::gcd(std::abs(exp), 8);
  const int p = exp / g;
  const int r = 8 / g;
  if (exp == 0) return "";
  if (r == 1 && p == 1) return "q";
  const std::string e = r == 1 ? std::to_string(p) : std::to_string(p) + "/" + std::to_string(r);
  if (n.latex) return "q^{" + e + "}";
  return (r == 1 && p > 0) ? "q^" + e : "q^(" + e + ")";
}

std::string rational_text(const Rational& c, const Notation& n) {
  if (c.get_den() == 1) return c.get_num().get_str();
  if (n.latex) return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
  return c.get_str();
}

// Terms in descending powers of q.
std::string poly_text(const LaurentPoly& p, const Notation& n) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const bool negative = sgn(it->coeff) < 0;
    const Rational mag = abs(it->coeff);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const std::string mono = q_monomial(it->exp, n);
    const std::string coeff = rational_text(mag, n);
    if (mono.empty())
      out += coeff;
    else if (mag == 1)
      out += mono;
    else
      out += coeff + (n.latex ? " " : "*") + mono;
  }
  return out;
}

std::string elem_text(const RingElem& e, const Notation& n) {
  if (e.is_laurent()) return poly_text(e.num(), n);
  const std::string num = poly_text(e.num(), n);
  const std::string den = poly_text(e.den(), n);
  if (n.latex) return "\\frac{" + num + "}{" + den + "}";
  const auto wrap = [](const LaurentPoly& p, const std::string& s) { return p.size() > 1 ? "(" + s + ")" : s; };
  return wrap(e.num(), num) + "/" + wrap(e.den(), den);
}

template <typename Cell>
std::string pmatrix(std::size_t rows, std::size_t cols, Cell&& cell) {
  std::string out = "\\begin{pmatrix}\n";
  for (std::size_t i = 0; i < rows; ++i) {
    out += "  ";
    for (std::size_t j = 0; j < cols; ++j) {
      if (j) out += " & ";
      out += cell(i, j);
    }
    out += i + 1 < rows ? " \\\\\n" : "\n";
  }
  return out + "\\end{pmatrix}";
}

template <typename Cell>
std::string aligned(std::size_t rows, std::size_t cols, Cell&& cell) {
  std::vector<std::vector<std::string>> text(rows, std::vector<std::string>(cols));
  std::vector<std::size_t> width(cols, 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      text[i][j] = cell(i, j);
      width[j] = std::max(width[j], text[i][j].size());
    }
  std::string out;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      out += text[i][j];
      if (j + 1 < cols) out += std::string(width[j] - text[i][j].size() + 2, ' ');
    }
    out += '\n';
  }
  return out;
}

std::string shortest(double v) {
  if (v == 0) return "0";
  std::ostringstream os;
  for (int prec = 15; prec <= 17; ++prec) {
    os.str("");
    os.precision(prec);
    os << v;
    if (std::stod(os.str()) == v) break;
  }
  return os.str();
}

}  // namespace

std::string to_json(const RingElem& e) { return elem_json(e).dump(); }

std::string to_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(elem_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}}.dump();
}

std::string to_json(const NumMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}}.dump();
}

RingElem ring_elem_from_json(std::string_view text) { return elem_from(parse_document(text)); }

QMatrix qmatrix_from_json(std::string_view text) {
  const json j = parse_document(text);
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw std::invalid_argument("QMatrix must have \"rows\", \"cols\" and \"entries\"");
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
    throw std::invalid_argument("QMatrix shape must be non-negative integers");
  const auto rows = j["rows"].get<std::size_t>();
  const auto cols = j["cols"].get<std::size_t>();
  const json& entries = j["entries"];
  if (!entries.is_array() || entries.size() != rows) throw std::invalid_argument("QMatrix row count mismatch");
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!entries[i].is_array() || entries[i].size() != cols)
      throw std::invalid_argument("QMatrix row " + std::to_string(i) + " has the wrong length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = elem_from(entries[i][k]);
  }
  return m;
}

std::string to_latex(const RingElem& e) { return elem_text(e, Notation{true}); }

std::string to_latex(const QMatrix& m) {
  return pmatrix(m.rows(), m.cols(), [&](std::size_t i, std::size_t j) { return to_latex(m(i, j)); });
}

std::string to_latex(const NumMatrix& m) {
  return pmatrix(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()), [&](std::size_t i, std::size_t j) {
    return format_complex(m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
  });
}

std::string to_plain(const RingElem& e) { return elem_text(e, Notation{false}); }

std::string to_plain(const QMatrix& m) {
  return aligned(m.rows(), m.cols(), [&](std::size_t i, std::size_t j) { return to_plain(m(i, j)); });
}

std::string to_plain(const NumMatrix& m) {
  return aligned(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()), [&](std::size_t i, std::size_t j) {
    return format_complex(m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
  });
}

std::string format_complex(std::complex<double> z) {
  const double scale = std::max(1.0, std::abs(z));
  const bool real = std::abs(z.imag()) <= 1e-14 * scale;
  const double re = std::abs(z.real()) <= 1e-14 * scale ? 0.0 : z.real();
  if (real) return shortest(re);
  const std::string im = shortest(std::abs(z.imag())) + "i";
  if (re == 0) return (z.imag() < 0 ? "-" : "") + im;
  return shortest(re) + (z.imag() < 0 ? " - " : " + ") + im;
}

}  // namespace qweyl
