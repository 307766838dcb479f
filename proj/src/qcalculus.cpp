#include "awstruct/qcalculus.hpp"

#include <stdexcept>

namespace awstruct {

Rational q_pochhammer(const Rational& a, const Rational& q, int n) {
  if (n < 0) throw std::invalid_argument("q_pochhammer: negative length");
  Rational product = 1;
  Rational term = a;
  for (int j = 0; j < n; ++j) {
    product *= Rational(1) - term;
    term *= q;
  }
  return product;
}

XPoly q_derivative(const XPoly& f, const Rational& q) {
  if (q == 1) throw std::domain_error("q_derivative: q = 1");
  // Coefficientwise: x^n -> (1 - q^n)/(1 - q) x^{n-1}; the division by x is exact.
  const XPoly numerator = f - dilate(f, q);
  return divide_exact(numerator, XPoly::monomial(Rational(1) - q, 1));
}

XPoly central_q_derivative(const XPoly& g, const Rational& q) {
  if (q == 0 || q == 1 || q == -1) throw std::domain_error("central_q_derivative: bad q");
  const Rational qinv = Rational(1) / q;
  const XPoly numerator = dilate(g, q) - dilate(g, qinv);
  return divide_exact(numerator, XPoly::monomial(q - qinv, 1));
}

SymLaurentPoly divided_q_difference(const SymLaurentPoly& g, const Rational& q_half) {
  if (q_half == 0 || q_half == 1 || q_half == -1)
    throw std::domain_error("divided_q_difference: bad q^{1/2}");
  const LaurentPoly f = g.to_laurent();
  const Rational inv = Rational(1) / q_half;
  const LaurentPoly numerator = (dilate(f, q_half) - dilate(f, inv)) * Rational(2);
  const LaurentPoly z_minus_inv(-1, {Rational(-1), Rational(0), Rational(1)});
  LaurentPoly quotient;
  try {
    quotient = divide_exact(numerator, z_minus_inv * (q_half - inv));
  } catch (const NonzeroRemainder& e) {
    throw std::logic_error(std::string("divided_q_difference: symmetric input not divisible: ") +
                           e.what());
  }
  return SymLaurentPoly::from_laurent(quotient);
}

}  // namespace awstruct
