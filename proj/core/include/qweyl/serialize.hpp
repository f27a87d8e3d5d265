#pragma once

#include <string>
#include <string_view>

#include "qweyl/matrix.hpp"

namespace qweyl {

// JSON schemas:
//   RingElem  {"num": [[exp, "p/q"], ...], "den": [[exp, "p/q"], ...]}
//             exponents of x, ascending; coefficients as exact rational strings.
//   QMatrix   {"rows": r, "cols": c, "entries": [[RingElem, ...], ...]}
//   numeric   {"rows": r, "cols": c, "entries": [[[re, im], ...], ...]}

std::string to_json(const RingElem& e);
std::string to_json(const QMatrix& m);
std::string to_json(const NumMatrix& m);

/// Inverse of to_json. Throws std::invalid_argument on malformed input.
RingElem ring_elem_from_json(std::string_view text);
QMatrix qmatrix_from_json(std::string_view text);

/// Rational function in q, exponents reduced (x^6 -> q^{3/4}).
std::string to_latex(const RingElem& e);
/// pmatrix environment.
std::string to_latex(const QMatrix& m);
std::string to_latex(const NumMatrix& m);

/// Same notation as LaTeX but ASCII, e.g. "-q^(-3/4)".
std::string to_plain(const RingElem& e);
/// One row per line, entries separated by two spaces in aligned columns.
std::string to_plain(const QMatrix& m);
std::string to_plain(const NumMatrix& m);

/// Shortest round-tripping decimal, dropping a negligible imaginary part.
std::string format_complex(std::complex<double> z);

}  // namespace qweyl
