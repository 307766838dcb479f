#include <doctest.h>

#include "awstruct/families.hpp"
#include "awstruct/qcalculus.hpp"
#include "awstruct/sampler.hpp"
#include "support.hpp"

using namespace awstruct;
using testing_support::R;

namespace {

const AwParams kAw{R(1, 3), R(1, 4), R(1, 5), R(-1, 6), R(1, 2)};

FamilySpec spec_of(FamilyId id, ParamMap params) {
  FamilySpec s;
  s.id = id;
  s.params = std::move(params);
  return s;
}

/// Generalized binomial coefficient binom(a, k).
Rational binom(const Rational& a, int k) {
  Rational out = 1;
  for (int i = 0; i < k; ++i) out *= (a - i) / (i + 1);
  return out;
}

/// Jacobi polynomial from the explicit two-sided sum.
Rational jacobi_oracle(int n, const Rational& al, const Rational& be, const Rational& x) {
  Rational sum = 0;
  for (int k = 0; k <= n; ++k)
    sum += binom(n + al, n - k) * binom(n + be, k) * pow((x - 1) / 2, k) * pow((x + 1) / 2, n - k);
  return sum;
}

/// Askey-Wilson polynomial evaluated at x = (z + 1/z)/2 straight from the 4phi3.
Rational aw_oracle(int n, const AwParams& p, const Rational& z) {
  const Rational& q = p.q;
  Rational sum = 0;
  for (int k = 0; k <= n; ++k) {
    const Rational num = q_pochhammer(pow(q, -n), q, k) * q_pochhammer(p.abcd() * pow(q, n - 1), q, k) *
                         q_pochhammer(p.a * z, q, k) * q_pochhammer(p.a / z, q, k);
    const Rational den = q_pochhammer(p.a * p.b, q, k) * q_pochhammer(p.a * p.c, q, k) *
                         q_pochhammer(p.a * p.d, q, k) * q_pochhammer(q, q, k);
    sum += num / den * pow(q, k);
  }
  return sum * q_pochhammer(p.a * p.b, q, n) * q_pochhammer(p.a * p.c, q, n) *
         q_pochhammer(p.a * p.d, q, n) * pow(p.a, -n);
}

/// Big q-Jacobi recurrence coefficients for (x - 1) P_n = A P_{n+1} - (A + C) P_n + C P_{n-1},
/// lower parameter -cq.
std::pair<Rational, Rational> bigq_oracle(int n, const Rational& a, const Rational& b, const Rational& c,
                                          const Rational& q) {
  const Rational ab = a * b;
  const Rational A = (1 - a * pow(q, n + 1)) * (1 - ab * pow(q, n + 1)) * (1 + c * pow(q, n + 1)) /
                     ((1 - ab * pow(q, 2 * n + 1)) * (1 - ab * pow(q, 2 * n + 2)));
  const Rational C = a * c * pow(q, n + 1) * (1 - pow(q, n)) * (1 - b * pow(q, n)) * (1 + ab * pow(q, n) / c) /
                     ((1 - ab * pow(q, 2 * n)) * (1 - ab * pow(q, 2 * n + 1)));
  return {A, C};
}

}  // namespace

TEST_SUITE("families") {

TEST_CASE("Askey-Wilson polynomials against the 4phi3 evaluated pointwise") {
  for (int n = 0; n <= 6; ++n) {
    const XPoly p = aw_polynomial(n, kAw);
    CHECK(p.degree() == n);
    for (const Rational& z : {R(2), R(-3, 5), R(7, 4)}) CHECK(p.eval((z + 1 / z) / 2) == aw_oracle(n, kAw, z));
  }
  CHECK(aw_polynomial(0, kAw) == XPoly::constant(R(1)));
}

TEST_CASE("Askey-Wilson leading coefficients and recurrence route") {
  const Rational abcd = kAw.abcd();
  CHECK(sym_to_x(x_to_sym(aw_polynomial(1, kAw))).leading() / 2 == 1 - abcd);
  CHECK(x_to_laurent_sym(aw_polynomial(1, kAw)).coeff(1) == 1 - abcd);
  const auto rec = aw_polynomials_by_recurrence(kAw, 8);
  for (int n = 0; n <= 8; ++n) {
    const Rational k = pow(R(2), n) * q_pochhammer(abcd * pow(kAw.q, n - 1), kAw.q, n);
    CHECK(aw_polynomial(n, kAw).leading() == k);
    CHECK(rec[static_cast<std::size_t>(n)] == aw_polynomial(n, kAw));
  }
}

TEST_CASE("Askey-Wilson closed-form coefficients") {
  const auto c0 = aw_coefficients(0, kAw);
  CHECK(c0.lambda == 0);
  CHECK(c0.gamma == 2 * (kAw.abcd() - 1));
  CHECK(c0.A * aw_coefficients(1, kAw).k == 1);
  const Rational& q = kAw.q;
  const Rational abcd = kAw.abcd();
  const auto c1 = aw_coefficients(1, kAw);
  CHECK(R(1, 2) * (1 - 1 / q) * c1.lambda == (1 / q - 1) * (1 - abcd));
  // h_1/h_0 from the closed form, written out.
  Rational six = 1;
  for (const Rational pr : {kAw.a * kAw.b, kAw.a * kAw.c, kAw.a * kAw.d, kAw.b * kAw.c, kAw.b * kAw.d, kAw.c * kAw.d})
    six *= 1 - pr;
  CHECK(c1.h == (1 - abcd / q) * (1 - q) * six / ((1 - abcd * q) * (1 - abcd / q)));

  const FamilyData d = build_family(spec_of(FamilyId::AskeyWilson, {{"a", kAw.a}, {"b", kAw.b}, {"c", kAw.c}, {"d", kAw.d}, {"q", q}}));
  for (int n = 0; n <= 10; ++n) {
    const auto cf = aw_coefficients(n, kAw);
    const auto i = static_cast<std::size_t>(n);
    CHECK(d.A[i] == cf.A);
    CHECK(d.B[i] == cf.B);
    CHECK(d.C[i] == cf.C);
    CHECK(d.h[i] == cf.h);
    CHECK(d.h[i] > 0);
  }
}

TEST_CASE("Jacobi polynomials against the explicit sum") {
  for (const auto& [al, be] : {std::pair{R(1), R(2)}, std::pair{R(-1, 2), R(3, 4)}, std::pair{R(0), R(0)}}) {
    const auto P = jacobi_polynomials(al, be, 10);
    for (int n = 0; n <= 10; ++n)
      for (const Rational& x : {R(0), R(1, 3), R(-2), R(5, 7)})
        CHECK(P[static_cast<std::size_t>(n)].eval(x) == jacobi_oracle(n, al, be, x));
    CHECK(P[1] == XPoly({(al - be) / 2, (al + be + 2) / 2}));
    for (int n = 0; n <= 10; ++n) {
      const auto cf = jacobi_coefficients(n, al, be);
      CHECK(cf.lambda == -Rational(n) * (n + al + be + 1) / 2);
      CHECK(cf.gamma == -(2 * n + al + be + 2) / 2);
    }
  }
}

TEST_CASE("Jacobi recurrence from expansion equals the closed forms") {
  const FamilyData d = build_family(spec_of(FamilyId::Jacobi, {{"alpha", R(1)}, {"beta", R(2)}}));
  for (int n = 0; n <= 10; ++n) {
    const auto cf = jacobi_coefficients(n, R(1), R(2));
    const auto i = static_cast<std::size_t>(n);
    CHECK(d.A[i] == cf.A);
    CHECK(d.B[i] == cf.B);
    CHECK(d.C[i] == cf.C);
  }
  // x p_2 expanded against the Legendre-like sample.
  const auto rc = recurrence_from_expansion(d.p, 2);
  CHECK(rc.A == d.A[2]);
}

TEST_CASE("continuous q-Jacobi: both embeddings agree") {
  const FamilySpec s = spec_of(FamilyId::CqJacobiEmbed49, {{"alpha", R(1)}, {"beta", R(2)}, {"s", R(1, 2)}});
  for (int n = 0; n <= 8; ++n)
    CHECK(cqjacobi_polynomial(n, s, CqJacobiEmbedding::Embed49) == cqjacobi_polynomial(n, s, CqJacobiEmbedding::Embed09));
  CHECK(cqjacobi_polynomial(0, s, CqJacobiEmbedding::Embed49) == XPoly::constant(R(1)));

  const FamilySpec zero = spec_of(FamilyId::CqJacobiEmbed49, {{"alpha", R(0)}, {"beta", R(0)}, {"s", R(1, 2)}});
  CHECK(cqjacobi_coefficients(0, zero).A * cqjacobi_coefficients(1, zero).C > 0);

  const FamilyData d = build_family(s);
  for (int n = 0; n <= 10; ++n) {
    const auto cf = cqjacobi_coefficients(n, s);
    CHECK(d.A[static_cast<std::size_t>(n)] == cf.A);
    CHECK(d.C[static_cast<std::size_t>(n)] == cf.C);
  }
  // gamma_0 = 2(q^{(alpha+beta+2)/2} - 1) with q = s^4.
  CHECK(cqjacobi_coefficients(0, s).gamma == 2 * (pow(R(1, 2), 2 * 5) - 1));
  CHECK(cqjacobi_coefficients(0, s).gamma_tilde == 2 * (pow(R(1, 2), 4 * 5) - 1));
}

TEST_CASE("continuous q-ultraspherical") {
  const Rational t = R(1, 3);
  const Rational s = R(1, 2);
  const Rational q = s * s;
  const FamilySpec spec = spec_of(FamilyId::CqUltraspherical, {{"t", t}, {"s", s}});
  const auto C = cqultra_polynomials(spec, 8);
  CHECK(C[0] == XPoly::constant(R(1)));
  // (z + 1/z) = 2x.
  CHECK(C[1] == XPoly({R(0), 2 * (1 - t) / (1 - q)}));
  const FamilyData d = build_family(spec);
  for (int n = 0; n <= 10; ++n) CHECK(d.B[static_cast<std::size_t>(n)] == 0);

  // Square parameters admit the Askey-Wilson route.
  const FamilySpec sq = spec_of(FamilyId::CqUltraspherical, {{"t", R(1, 4)}, {"s", R(4, 9)}});
  const auto Csq = cqultra_polynomials(sq, 6);
  for (int n = 0; n <= 6; ++n) {
    const auto viaaw = cqultra_polynomial_from_aw(n, sq);
    REQUIRE(viaaw);
    CHECK(*viaaw == Csq[static_cast<std::size_t>(n)]);
  }
  CHECK_FALSE(cqultra_polynomial_from_aw(2, spec));
}

TEST_CASE("big q-Jacobi polynomials and recurrence data") {
  const Rational a = R(1, 3), b = R(1, 4), c = R(1, 5), q = R(1, 2);
  CHECK(bigq_polynomial(0, a, b, c, q) == XPoly::constant(R(1)));
  // Two-term 3phi2: the k = 1 term carries (1 - q^-1) q / (1 - q) = -1.
  const XPoly one_minus_x({R(1), R(-1)});
  CHECK(bigq_polynomial(1, a, b, c, q) ==
        XPoly::constant(R(1)) - one_minus_x * ((1 - a * b * q * q) / ((1 - a * q) * (1 + c * q))));
  for (int n = 0; n <= 8; ++n) CHECK(bigq_polynomial(n, a, b, c, q).eval(R(1)) == 1);

  const FamilyData d = build_family(spec_of(FamilyId::BigQJacobi, {{"a", a}, {"b", b}, {"c", c}, {"q", q}}));
  for (int n = 0; n <= 10; ++n) {
    const auto [A, C] = bigq_oracle(n, a, b, c, q);
    const auto i = static_cast<std::size_t>(n);
    CHECK(d.A[i] == A);
    CHECK(d.C[i] == C);
    CHECK(d.B[i] == 1 - A - C);
  }
}

TEST_CASE("admissibility") {
  CHECK_THROWS_AS(build_family(spec_of(FamilyId::AskeyWilson, {{"a", R(1, 2)}, {"b", R(1)}, {"c", R(1, 5)}, {"d", R(1, 7)}, {"q", R(1, 2)}})),
                  InadmissibleParameters);
  CHECK_THROWS_AS(build_family(spec_of(FamilyId::Jacobi, {{"alpha", R(-1)}, {"beta", R(0)}})), InadmissibleParameters);
  CHECK_THROWS_AS(build_family(spec_of(FamilyId::CqJacobiEmbed49, {{"alpha", R(1, 3)}, {"beta", R(0)}, {"s", R(1, 2)}})),
                  InadmissibleParameters);
  CHECK_THROWS(build_family(spec_of(FamilyId::BigQJacobi, {{"a", R(1, 3)}, {"b", R(1, 4)}})));
}

TEST_CASE("sampler is deterministic and admissible") {
  const ParameterSampler s1(42), s2(42), s3(43);
  bool differs = false;
  for (FamilyId id : kAllFamilies) {
    for (int i = 0; i < 5; ++i) {
      const FamilySpec a = s1.sample(id, i);
      CHECK(a.params == s2.sample(id, i).params);
      differs = differs || a.params != s3.sample(id, i).params;
      CHECK_NOTHROW(build_family(a));
    }
  }
  CHECK(differs);
}

TEST_CASE("orthogonality through the norms") {
  const ParameterSampler sampler(1);
  for (FamilyId id : kAllFamilies) {
    const FamilyData d = build_family(sampler.sample(id, 0));
    for (int n = 0; n <= 10; ++n) {
      CHECK(d.p[static_cast<std::size_t>(n)].degree() == n);
      CHECK(d.p[static_cast<std::size_t>(n)].leading() == d.k[static_cast<std::size_t>(n)]);
      CHECK(d.gamma[static_cast<std::size_t>(n)] != 0);
      CHECK(d.gamma[static_cast<std::size_t>(n)] == d.lambda[static_cast<std::size_t>(n + 1)] - d.lambda[static_cast<std::size_t>(n)]);
      if (n >= 1) CHECK(d.C[static_cast<std::size_t>(n)] == d.A[static_cast<std::size_t>(n - 1)] * d.h[static_cast<std::size_t>(n)] / d.h[static_cast<std::size_t>(n - 1)]);
    }
  }
}

}  // TEST_SUITE
