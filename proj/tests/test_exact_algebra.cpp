#include <doctest.h>

#include "awstruct/laurent.hpp"
#include "support.hpp"

using namespace awstruct;
using testing_support::R;

namespace {

LaurentPoly lp(int low, std::vector<Rational> c) { return LaurentPoly(low, std::move(c)); }

}  // namespace

TEST_SUITE("exact_algebra") {

TEST_CASE("rationals are canonical and round-trip through text") {
  CHECK(parse_rational("6/-4") == R(-3, 2));
  CHECK(to_fraction_string(parse_rational("-12/8")) == "-3/2");
  CHECK(to_fraction_string(R(5)) == "5/1");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  Rational root;
  CHECK(rational_sqrt(R(9, 49), &root));
  CHECK(root == R(3, 7));
  CHECK_FALSE(rational_sqrt(R(2), &root));
  CHECK(pow(R(2, 3), -2) == R(9, 4));
}

TEST_CASE("sym_to_x on the basic symmetric polynomials") {
  CHECK(sym_to_x(SymLaurentPoly({R(1)})) == XPoly::constant(R(1)));
  CHECK(sym_to_x(SymLaurentPoly({R(0), R(1)})) == XPoly({R(0), R(2)}));
  CHECK(sym_to_x(SymLaurentPoly({R(0), R(0), R(1)})) == XPoly({R(-2), R(0), R(4)}));
}

TEST_CASE("sym and x representations round-trip up to degree 20") {
  std::mt19937_64 rng(11);
  for (int deg = 0; deg <= 20; ++deg) {
    const SymLaurentPoly f(testing_support::random_coeffs(rng, deg + 1));
    const XPoly x = sym_to_x(f);
    CHECK(x.degree() == deg);
    CHECK(x_to_sym(x) == f);
    CHECK(sym_to_x(x_to_sym(x)) == x);
  }
}

TEST_CASE("evaluating the x form at (z + 1/z)/2 reproduces the Laurent form") {
  // f = 3 + 2(z + 1/z) - (z^2 + z^-2)
  const SymLaurentPoly f({R(3), R(2), R(-1)});
  const XPoly x = sym_to_x(f);
  const Rational z = R(3, 5);
  const Rational at = (z + 1 / z) / 2;
  const LaurentPoly l = f.to_laurent();
  Rational direct = 0;
  for (int k = l.low(); k <= l.high(); ++k) direct += l.coeff(k) * pow(z, k);
  CHECK(x.eval(at) == direct);
}

TEST_CASE("dilate") {
  const LaurentPoly zpz = lp(-1, {R(1), R(0), R(1)});
  CHECK(dilate(zpz, R(1)) == zpz);
  CHECK(dilate(LaurentPoly::z(), R(1, 3)) == LaurentPoly::monomial(R(1, 3), 1));
  CHECK(dilate(lp(0, {R(3), R(0), R(1)}), R(1, 2)) == lp(0, {R(3), R(0), R(1, 4)}));
  CHECK_THROWS(dilate(zpz, R(0)));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const LaurentPoly f(-3, testing_support::random_coeffs(rng, 7));
    Rational r = testing_support::random_rational(rng);
    if (r == 0) r = R(2, 7);
    CHECK(dilate(dilate(f, r), 1 / r) == f);
  }
}

TEST_CASE("divide_exact") {
  const LaurentPoly num = lp(-2, {R(-1), R(0), R(0), R(0), R(1)});
  const LaurentPoly den = lp(-1, {R(-1), R(0), R(1)});
  CHECK(divide_exact(num, den) == lp(-1, {R(1), R(0), R(1)}));
  CHECK(divide_exact(num, LaurentPoly::constant(R(1))) == num);
  CHECK_THROWS_AS(divide_exact(den + LaurentPoly::constant(R(1)), den), NonzeroRemainder);
  CHECK_THROWS(divide_exact(num, LaurentPoly()));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 30; ++i) {
    const LaurentPoly f(-static_cast<int>(rng() % 5), testing_support::random_coeffs(rng, 1 + static_cast<int>(rng() % 10)));
    LaurentPoly g(-static_cast<int>(rng() % 5), testing_support::random_coeffs(rng, 1 + static_cast<int>(rng() % 10)));
    if (g.is_zero()) g = LaurentPoly::constant(R(1));
    CHECK(divide_exact(f * g, g) == f);
  }
  const XPoly fx({R(1), R(2), R(3)});
  const XPoly gx({R(-1), R(1)});
  CHECK(divide_exact(fx * gx, gx) == fx);
  CHECK_THROWS_AS(divide_exact(fx, gx), NonzeroRemainder);
}

TEST_CASE("ring arithmetic") {
  const LaurentPoly zpz = lp(-1, {R(1), R(0), R(1)});
  CHECK(zpz * zpz == lp(-2, {R(1), R(0), R(2), R(0), R(1)}));
  CHECK(zpz + LaurentPoly() == zpz);
  CHECK((zpz * R(0)).is_zero());
  CHECK((zpz - zpz).is_zero());
  CHECK((zpz - zpz).coeffs().empty());

  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const SymLaurentPoly a(testing_support::random_coeffs(rng, 1 + static_cast<int>(rng() % 6)));
    const SymLaurentPoly b(testing_support::random_coeffs(rng, 1 + static_cast<int>(rng() % 6)));
    const LaurentPoly prod = (a * b).to_laurent();
    CHECK(prod.is_symmetric());
    CHECK(prod == a.to_laurent() * b.to_laurent());
    CHECK(sym_to_x(a * b) == sym_to_x(a) * sym_to_x(b));
  }
  const LaurentPoly f = lp(-2, {R(1), R(2), R(3)});
  const LaurentPoly g = lp(1, {R(4), R(5)});
  CHECK((f * g).high() == f.high() + g.high());
  CHECK((f * g).low() == f.low() + g.low());
}

}  // TEST_SUITE
