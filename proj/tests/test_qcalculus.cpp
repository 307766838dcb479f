#include <doctest.h>

#include "awstruct/qcalculus.hpp"
#include "support.hpp"

using namespace awstruct;
using testing_support::R;

TEST_SUITE("qcalculus") {

TEST_CASE("finite q-Pochhammer symbols") {
  CHECK(q_pochhammer(R(2, 7), R(1, 3), 0) == 1);
  CHECK(q_pochhammer(R(2, 7), R(1, 3), 1) == R(5, 7));
  CHECK(q_pochhammer(R(1, 2), R(1, 2), 2) == R(3, 8));
  CHECK(q_pochhammer(R(1), R(1, 2), 3) == 0);
}

TEST_CASE("q-derivative") {
  const Rational q = R(2, 5);
  CHECK(q_derivative(XPoly::constant(R(7)), q).is_zero());
  CHECK(q_derivative(XPoly::x(), q) == XPoly::constant(R(1)));
  CHECK(q_derivative(XPoly::monomial(R(1), 2), q) == XPoly::monomial(1 + q, 1));
  for (int n = 1; n <= 8; ++n)
    CHECK(q_derivative(XPoly::monomial(R(1), n), q) == XPoly::monomial((1 - pow(q, n)) / (1 - q), n - 1));
}

TEST_CASE("q-Leibniz rule on random polynomials") {
  std::mt19937_64 rng(19);
  const Rational q = R(3, 7);
  for (int i = 0; i < 20; ++i) {
    const XPoly f(testing_support::random_coeffs(rng, 1 + static_cast<int>(rng() % 8)));
    const XPoly g(testing_support::random_coeffs(rng, 1 + static_cast<int>(rng() % 8)));
    CHECK(q_derivative(f * g, q) == dilate(f, q) * q_derivative(g, q) + q_derivative(f, q) * g);
  }
}

TEST_CASE("central q-derivative") {
  const Rational q = R(1, 3);
  CHECK(central_q_derivative(XPoly::constant(R(5)), q).is_zero());
  CHECK(central_q_derivative(XPoly::x(), q) == XPoly::constant(R(1)));
  CHECK(central_q_derivative(XPoly::monomial(R(1), 2), q) == XPoly::monomial(q + 1 / q, 1));
  for (int n = 1; n <= 8; ++n) {
    const Rational bracket = (pow(q, n) - pow(q, -n)) / (q - 1 / q);
    CHECK(central_q_derivative(XPoly::monomial(R(1), n), q) == XPoly::monomial(bracket, n - 1));
  }
}

TEST_CASE("divided q-difference") {
  const Rational h = R(1, 2);  // q^{1/2}
  CHECK(divided_q_difference(SymLaurentPoly({R(1)}), h).is_zero());
  CHECK(divided_q_difference(SymLaurentPoly({R(0), R(1)}), h) == SymLaurentPoly({R(2)}));
  // 2 (g[hz] - g[z/h]) / ((h - 1/h)(z - 1/z)) at g = z^2 + z^-2, by brute force.
  const LaurentPoly g(-2, {R(1), R(0), R(0), R(0), R(1)});
  const LaurentPoly num = (dilate(g, h) - dilate(g, 1 / h)) * R(2);
  const LaurentPoly den = LaurentPoly(-1, {R(-1), R(0), R(1)}) * (h - 1 / h);
  CHECK(divided_q_difference(SymLaurentPoly({R(0), R(0), R(1)}), h).to_laurent() == divide_exact(num, den));
  // 2 (h + 1/h)(z + 1/z).
  CHECK(divided_q_difference(SymLaurentPoly({R(0), R(0), R(1)}), h) == SymLaurentPoly({R(0), 2 * (h + 1 / h)}));
  std::mt19937_64 rng(2);
  for (int deg = 1; deg <= 8; ++deg) {
    const SymLaurentPoly f(testing_support::random_coeffs(rng, deg + 1));
    CHECK(divided_q_difference(f, R(2, 3)).degree() == deg - 1);
  }
}

}  // TEST_SUITE
