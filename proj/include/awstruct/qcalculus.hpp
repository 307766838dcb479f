#pragma once

/// \file
/// q-calculus primitives: finite q-Pochhammer symbols, the q-derivative,
/// the central q-derivative and the divided q-difference on symmetric
/// Laurent polynomials.

#include "awstruct/laurent.hpp"
#include "awstruct/rational.hpp"

namespace awstruct {

/// (a; q)_n = prod_{j=0}^{n-1} (1 - a q^j); (a; q)_0 = 1.
Rational q_pochhammer(const Rational& a, const Rational& q, int n);

/// (D_q f)(x) = (f(x) - f(qx)) / ((1 - q) x). Requires q != 1.
XPoly q_derivative(const XPoly& f, const Rational& q);

/// (d_q g)(x) = (g(qx) - g(x/q)) / ((q - 1/q) x). Requires q not in {0, 1, -1}.
XPoly central_q_derivative(const XPoly& g, const Rational& q);

/// 2 (g[q^{1/2} z] - g[q^{-1/2} z]) / ((q^{1/2} - q^{-1/2}) (z - 1/z)),
/// parametrized directly by q_half = q^{1/2}.
SymLaurentPoly divided_q_difference(const SymLaurentPoly& g, const Rational& q_half);

}  // namespace awstruct
