#pragma once

// Exact arithmetic in Q(x), x = q^(1/8), and the q-numbers built on it.

#include "qweyl/laurent_poly.hpp"
#include "qweyl/ring_elem.hpp"

namespace qweyl {

/// q^r as the monomial x^(8r). Throws std::invalid_argument unless 8r is an
/// integer.
RingElem q_power(const Rational& r);
RingElem q_power(int num, int den = 1);

/// Quantum integer [n] = (q^(n/2) - q^(-n/2)) / (q^(1/2) - q^(-1/2)),
/// expanded as x^(4(n-1)) + x^(4(n-3)) + ... + x^(-4(n-1)). [-n] = -[n].
RingElem q_int(int n);

/// [n]! = [1][2]...[n]; [0]! = 1. Throws std::invalid_argument for n < 0.
RingElem q_factorial(int n);

/// Symmetric q-binomial [n choose k]; zero when k < 0 or k > n.
RingElem q_binomial(int n, int k);

}  // namespace qweyl
