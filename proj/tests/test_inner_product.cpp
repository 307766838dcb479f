#include <doctest.h>

#include "awstruct/inner_product.hpp"
#include "awstruct/sampler.hpp"
#include "support.hpp"

using namespace awstruct;
using testing_support::R;

TEST_SUITE("inner_product") {

TEST_CASE("expansion in the orthogonal basis") {
  FamilySpec spec;
  spec.id = FamilyId::Jacobi;
  spec.params = {{"alpha", R(1)}, {"beta", R(2)}};
  const FamilyData d = build_family(spec);
  CHECK(expand_in_family(XPoly::constant(R(1)), d) == std::vector<Rational>{R(1)});
  CHECK(expand_in_family(d.p[3], d) == std::vector<Rational>{R(0), R(0), R(0), R(1)});
  const auto c = expand_in_family(XPoly::x() * d.p[2], d);
  REQUIRE(c.size() == 4);
  const auto j = jacobi_coefficients(2, R(1), R(2));
  CHECK(c[0] == 0);
  CHECK(c[1] == j.C);
  CHECK(c[2] == j.B);
  CHECK(c[3] == j.A);

  CHECK(inner(d.p[0], d.p[0], d) == 1);
  CHECK(inner(d.p[1], d.p[0], d) == 0);
  CHECK(inner(XPoly::x(), XPoly::x(), d) == d.B[0] * d.B[0] + d.A[0] * d.A[0] * d.h[1]);

  std::mt19937_64 rng(4);
  for (int deg = 0; deg <= 10; ++deg) {
    const XPoly f(testing_support::random_coeffs(rng, deg + 1));
    const auto cf = expand_in_family(f, d);
    XPoly back;
    for (std::size_t n = 0; n < cf.size(); ++n) back += cf[n] * d.p[n];
    CHECK(back == f);
  }
}

TEST_CASE("orthogonality on every family") {
  const ParameterSampler sampler(21);
  for (FamilyId id : kAllFamilies) {
    for (int s = 0; s < 3; ++s) {
      const FamilyData d = build_family(sampler.sample(id, s));
      for (int m = 0; m <= 10; ++m)
        for (int n = 0; n <= 10; ++n)
          CHECK(inner(d.p[static_cast<std::size_t>(m)], d.p[static_cast<std::size_t>(n)], d) ==
                (m == n ? d.h[static_cast<std::size_t>(n)] : Rational(0)));
    }
  }
}

TEST_CASE("symmetry and skew symmetry of the family operators") {
  const ParameterSampler sampler(33);
  for (FamilyId id : kAllFamilies) {
    const FamilySpec spec = sampler.sample(id, 0);
    const FamilyData d = build_family(spec);
    const FamilyOperators ops = family_operators(spec);
    CHECK(skew_symmetry_residual(ops.L, d, 10) == 0);
    CHECK(symmetry_residual(ops.D, d, 10) == 0);
    CHECK(symmetry_residual(ops.X, d, 10) == 0);
    CHECK_FALSE(skew_symmetry_defect(ops.L, d, 10));
    CHECK(skew_symmetry_residual(ops.X, d, 10) != 0);
  }
}

TEST_CASE("the non-skew continuous q-ultraspherical operator") {
  FamilySpec spec;
  spec.id = FamilyId::CqUltraspherical;
  spec.params = {{"t", R(1, 3)}, {"s", R(1, 2)}};
  const FamilyData d = build_family(spec);
  CHECK(skew_symmetry_residual(cqultra_L(spec, 10), d, 8) == 0);
  CHECK(skew_symmetry_residual(cqultra_nonskew_L(spec, 10), d, 8) > 0);
  const auto defect = skew_symmetry_defect(cqultra_nonskew_L(spec, 10), d, 8);
  REQUIRE(defect);
  CHECK(defect->row.size() == 9);
}

}  // TEST_SUITE
