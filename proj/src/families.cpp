#include "awstruct/families.hpp"

#include <array>

#include <utility>

#include "awstruct/qcalculus.hpp"

namespace awstruct {

namespace {

const Rational kOne(1);
const Rational kTwo(2);

void require(bool ok, const std::string& what) {
  if (!ok) throw InadmissibleParameters(what);
}

/// Integral value of a rational, or InadmissibleParameters.
long integral(const Rational& r, const std::string& what) {
  require(r.get_den() == 1, what + " is not integral");
  require(r.get_num().fits_slong_p(), what + " out of range");
  return r.get_num().get_si();
}

/// s^(4x) for rational x with 4x integral: the q = s^4 power q^x.
Rational qpow_s4(const Rational& s, const Rational& x) {
  return pow(s, integral(Rational(4) * x, "4 * exponent"));
}

/// Linear factor 1 - r x in the variable x.
XPoly one_minus(const Rational& r) { return XPoly({kOne, -r}); }

}  // namespace

std::string_view family_name(FamilyId id) {
  switch (id) {
    case FamilyId::AskeyWilson: return "askey-wilson";
    case FamilyId::Jacobi: return "jacobi";
    case FamilyId::CqJacobiEmbed49: return "cq-jacobi-49";
    case FamilyId::CqJacobiEmbed09: return "cq-jacobi-09";
    case FamilyId::CqUltraspherical: return "cq-ultraspherical";
    case FamilyId::BigQJacobi: return "big-q-jacobi";
  }
  return "unknown";
}

std::optional<FamilyId> family_from_name(std::string_view name) {
  for (FamilyId id : kAllFamilies) {
    if (family_name(id) == name) return id;
  }
  return std::nullopt;
}

Variable family_variable(FamilyId id) {
  switch (id) {
    case FamilyId::Jacobi:
    case FamilyId::BigQJacobi: return Variable::X;
    default: return Variable::Z;
  }
}

std::vector<std::string> family_parameter_names(FamilyId id) {
  switch (id) {
    case FamilyId::AskeyWilson: return {"a", "b", "c", "d", "q"};
    case FamilyId::Jacobi: return {"alpha", "beta"};
    case FamilyId::CqJacobiEmbed49:
    case FamilyId::CqJacobiEmbed09: return {"alpha", "beta", "s"};
    case FamilyId::CqUltraspherical: return {"t", "s"};
    case FamilyId::BigQJacobi: return {"a", "b", "c", "q"};
  }
  return {};
}

const Rational& FamilySpec::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end())
    throw std::invalid_argument("family " + std::string(family_name(id)) +
                                " is missing parameter '" + name + "'");
  return it->second;
}

Rational FamilySpec::q() const {
  switch (id) {
    case FamilyId::AskeyWilson:
    case FamilyId::BigQJacobi: return param("q");
    case FamilyId::CqJacobiEmbed49:
    case FamilyId::CqJacobiEmbed09: return pow(param("s"), 4);
    case FamilyId::CqUltraspherical: return pow(param("s"), 2);
    case FamilyId::Jacobi: break;
  }
  throw std::logic_error("Jacobi polynomials have no q");
}

AwSymbol aw_symbol(const AwParams& p) {
  LaurentPoly quartic = LaurentPoly::constant(kOne);
  for (const Rational* r : {&p.a, &p.b, &p.c, &p.d}) quartic = quartic * LaurentPoly(0, {kOne, -*r});
  return {std::move(quartic), p.q};
}

AwParams cqjacobi_aw_params(const FamilySpec& spec, CqJacobiEmbedding embedding) {
  const Rational& s = spec.param("s");
  const Rational two_alpha = Rational(2) * spec.param("alpha");
  const Rational two_beta = Rational(2) * spec.param("beta");
  const long ea = integral(two_alpha, "2 alpha") + 1;  // q^{alpha/2 + 1/4} = s^{2 alpha + 1}
  const long eb = integral(two_beta, "2 beta") + 1;
  if (embedding == CqJacobiEmbedding::Embed49)
    return {pow(s, ea), -pow(s, eb), s, -s, pow(s, 2)};
  return {pow(s, ea), pow(s, ea + 2), -pow(s, eb), -pow(s, eb + 2), pow(s, 4)};
}

AwSymbol family_aw_symbol(const FamilySpec& spec) {
  switch (spec.id) {
    case FamilyId::AskeyWilson:
      return aw_symbol({spec.param("a"), spec.param("b"), spec.param("c"), spec.param("d"),
                        spec.param("q")});
    case FamilyId::CqJacobiEmbed49:
      return aw_symbol(cqjacobi_aw_params(spec, CqJacobiEmbedding::Embed49));
    case FamilyId::CqJacobiEmbed09:
      return aw_symbol(cqjacobi_aw_params(spec, CqJacobiEmbedding::Embed09));
    case FamilyId::CqUltraspherical: {
      // (1 - t z^2)(1 - q^{1/2} z^2) = (1 - t^{1/2} z)(1 + t^{1/2} z)(1 - q^{1/4} z)(1 + q^{1/4} z)
      const Rational& t = spec.param("t");
      const Rational& s = spec.param("s");
      return {LaurentPoly(0, {kOne, 0, -t}) * LaurentPoly(0, {kOne, 0, -s}), s};
    }
    default: break;
  }
  throw std::logic_error("family " + std::string(family_name(spec.id)) +
                         " has no Askey-Wilson symbol");
}

// ---------------------------------------------------------------- Askey-Wilson

XPoly aw_polynomial(int n, const AwParams& p) {
  const Rational& q = p.q;
  const Rational ab = p.a * p.b, ac = p.a * p.c, ad = p.a * p.d;
  const Rational upper1 = pow(q, -n);
  const Rational upper2 = p.abcd() * pow(q, n - 1);

  Rational weight = 1;  // (q^-n, abcd q^{n-1}; q)_k q^k / (ab, ac, ad, q; q)_k
  XPoly pair = XPoly::constant(kOne);  // (a z, a/z; q)_k as a polynomial in x
  XPoly sum;
  Rational qk = 1;  // q^k
  for (int k = 0; k <= n; ++k) {
    sum += pair * weight;
    // step k -> k + 1
    weight *= (kOne - upper1 * qk) * (kOne - upper2 * qk) * q /
              ((kOne - ab * qk) * (kOne - ac * qk) * (kOne - ad * qk) * (kOne - qk * q));
    // (1 - a q^k z)(1 - a q^k / z) = 1 + a^2 q^{2k} - 2 a q^k x
    const Rational aqk = p.a * qk;
    pair = pair * XPoly({kOne + aqk * aqk, Rational(-2) * aqk});
    qk *= q;
  }
  const Rational prefactor =
      q_pochhammer(ab, q, n) * q_pochhammer(ac, q, n) * q_pochhammer(ad, q, n) * pow(p.a, -n);
  return sum * prefactor;
}

AwClosedForms aw_coefficients(int n, const AwParams& p) {
  const Rational& q = p.q;
  const Rational abcd = p.abcd();
  auto k_of = [&](int m) -> Rational { return pow(kTwo, m) * q_pochhammer(abcd * pow(q, m - 1), q, m); };
  auto h_of = [&](int m) -> Rational {
    const Rational top = (kOne - abcd / q) / (kOne - abcd * pow(q, 2 * m - 1));
    Rational poch = q_pochhammer(q, q, m);
    for (const Rational& pair : std::array<Rational, 6>{p.a * p.b, p.a * p.c, p.a * p.d, p.b * p.c, p.b * p.d, p.c * p.d})
      poch *= q_pochhammer(pair, q, m);
    return top * poch / q_pochhammer(abcd / q, q, m);
  };

  AwClosedForms out;
  out.k = k_of(n);
  out.A = out.k / k_of(n + 1);
  const Rational e1 = p.a + p.b + p.c + p.d;
  const Rational e3 = p.b * p.c * p.d + p.a * p.b * p.d + p.a * p.c * p.d + p.a * p.b * p.c;
  const Rational qn = pow(q, n);
  out.B = (e1 * (q - abcd * pow(q, n - 1) - abcd * qn + abcd * pow(q, 2 * n)) +
           e3 * (kOne - qn - qn * q + abcd * pow(q, 2 * n - 1))) *
          pow(q, n - 1) /
          (kTwo * (kOne - abcd * pow(q, 2 * n - 2)) * (kOne - abcd * pow(q, 2 * n)));
  out.h = h_of(n);
  out.C = 0;
  if (n >= 1) out.C = (k_of(n - 1) / k_of(n)) * out.h / h_of(n - 1);
  out.lambda = kTwo * (pow(q, -n) - kOne) * (kOne - abcd * pow(q, n - 1)) / (kOne - kOne / q);
  out.gamma = kTwo * (abcd * qn - kOne / qn);
  return out;
}

std::vector<XPoly> aw_polynomials_by_recurrence(const AwParams& p, int n_max) {
  std::vector<XPoly> out{XPoly::constant(kOne)};
  XPoly prev;
  for (int n = 0; n < n_max; ++n) {
    const AwClosedForms cf = aw_coefficients(n, p);
    XPoly next = XPoly::x() * out[n] - out[n] * cf.B;
    if (n >= 1) next -= out[n - 1] * cf.C;
    out.push_back(next * (kOne / cf.A));
  }
  return out;
}

// ---------------------------------------------------------------------- Jacobi

JacobiClosedForms jacobi_coefficients(int n, const Rational& alpha, const Rational& beta) {
  const Rational s = alpha + beta;
  JacobiClosedForms out;
  if (n == 0) {
    out.A = kTwo / (s + 2);
    out.B = (beta - alpha) / (s + 2);
    out.C = 0;
  } else {
    const Rational two_n_s = Rational(2 * n) + s;
    out.A = kTwo * (n + 1) * (Rational(n) + s + 1) / ((two_n_s + 1) * (two_n_s + 2));
    out.B = (beta * beta - alpha * alpha) / (two_n_s * (two_n_s + 2));
    out.C = kTwo * (Rational(n) + alpha) * (Rational(n) + beta) / (two_n_s * (two_n_s + 1));
  }
  out.lambda = -Rational(1, 2) * n * (Rational(n) + s + 1);
  out.gamma = -Rational(1, 2) * (Rational(2 * n) + s + 2);
  return out;
}

std::vector<XPoly> jacobi_polynomials(const Rational& alpha, const Rational& beta, int n_max) {
  std::vector<XPoly> out{XPoly::constant(kOne)};
  for (int n = 0; n < n_max; ++n) {
    const JacobiClosedForms cf = jacobi_coefficients(n, alpha, beta);
    XPoly next = XPoly::x() * out[n] - out[n] * cf.B;
    if (n >= 1) next -= out[n - 1] * cf.C;
    out.push_back(next * (kOne / cf.A));
  }
  return out;
}

// ------------------------------------------------------- continuous q-Jacobi

XPoly cqjacobi_polynomial(int n, const FamilySpec& spec, CqJacobiEmbedding embedding) {
  const Rational& s = spec.param("s");
  const AwParams aw = cqjacobi_aw_params(spec, embedding);
  const Rational q = pow(s, 4);
  // q^{(alpha/2 + 1/4) n} = a^n with a the first induced parameter.
  const Rational base = -pow(s, integral(Rational(2) * (spec.param("alpha") + spec.param("beta")), "2(alpha+beta)") + 2);
  const int len = embedding == CqJacobiEmbedding::Embed49 ? n : 2 * n;
  const Rational denom = q_pochhammer(base, pow(s, 2), len) * q_pochhammer(q, q, n);
  return aw_polynomial(n, aw) * (pow(aw.a, n) / denom);
}

CqJacobiClosedForms cqjacobi_coefficients(int n, const FamilySpec& spec) {
  const Rational& s = spec.param("s");
  const Rational& al = spec.param("alpha");
  const Rational& be = spec.param("beta");
  const Rational nn(n);
  auto qp = [&](const Rational& x) { return qpow_s4(s, x); };
  const Rational a_half = qp(al / 2 + Rational(1, 4));
  CqJacobiClosedForms out;
  out.A = (kOne - qp(nn + 1)) * (kOne - qp(nn + al + be + 1)) /
          (kTwo * a_half * (kOne - qp(nn + (al + be + 1) / 2)) * (kOne - qp(nn + (al + be + 2) / 2)));
  out.C = 0;
  if (n >= 1)
    out.C = a_half * (kOne - qp(nn + al)) * (kOne - qp(nn + be)) /
            (kTwo * (kOne - qp(nn + (al + be) / 2)) * (kOne - qp(nn + (al + be + 1) / 2)));
  out.gamma = kTwo * (qp((nn + al + be + 2) / 2) - qp(-nn / 2));
  out.gamma_tilde = kTwo * (qp(nn + al + be + 2) - qp(-nn));
  return out;
}

// ------------------------------------------------- continuous q-ultraspherical

CqUltraClosedForms cqultra_coefficients(int n, const FamilySpec& spec) {
  const Rational& t = spec.param("t");
  const Rational q = spec.q();
  const Rational qn = pow(q, n);
  CqUltraClosedForms out;
  out.A = (kOne - qn * q) / (kTwo * (kOne - t * qn));
  out.B = 0;
  out.C = 0;
  if (n >= 1) out.C = (kOne - t * t * pow(q, n - 1)) / (kTwo * (kOne - t * qn));
  return out;
}

std::vector<XPoly> cqultra_polynomials(const FamilySpec& spec, int n_max) {
  std::vector<XPoly> out{XPoly::constant(kOne)};
  for (int n = 0; n < n_max; ++n) {
    const CqUltraClosedForms cf = cqultra_coefficients(n, spec);
    XPoly next = XPoly::x() * out[n];
    if (n >= 1) next -= out[n - 1] * cf.C;
    out.push_back(next * (kOne / cf.A));
  }
  return out;
}

std::optional<XPoly> cqultra_polynomial_from_aw(int n, const FamilySpec& spec) {
  const Rational& t = spec.param("t");
  const Rational& s = spec.param("s");
  Rational u, r;
  if (!rational_sqrt(t, &u) || !rational_sqrt(s, &r)) return std::nullopt;
  const Rational q = s * s;
  const Rational scale =
      q_pochhammer(t, s, n) / (q_pochhammer(s * t, q, n) * q_pochhammer(q, q, n));
  return aw_polynomial(n, {u, -u, r, -r, s}) * scale;
}

// ------------------------------------------------------------- big q-Jacobi

XPoly bigq_polynomial(int n, const Rational& a, const Rational& b, const Rational& c,
                      const Rational& q) {
  const Rational upper1 = pow(q, -n);
  const Rational upper2 = a * b * pow(q, n + 1);
  Rational weight = 1;
  XPoly x_poch = XPoly::constant(kOne);  // (x; q)_k
  XPoly sum;
  Rational qk = 1;
  for (int k = 0; k <= n; ++k) {
    sum += x_poch * weight;
    weight *= (kOne - upper1 * qk) * (kOne - upper2 * qk) * q /
              ((kOne - a * q * qk) * (kOne + c * q * qk) * (kOne - q * qk));
    x_poch = x_poch * one_minus(qk);
    qk *= q;
  }
  return sum;
}

// ---------------------------------------------------------- generic machinery

std::vector<Rational> expand_in_basis(const XPoly& f, std::span<const XPoly> basis) {
  if (f.degree() >= static_cast<int>(basis.size()))
    throw std::runtime_error("expand_in_basis: degree " + std::to_string(f.degree()) +
                             " exceeds basis size " + std::to_string(basis.size()));
  std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(f.degree() + 1, 0)));
  XPoly rest = f;
  for (int m = f.degree(); m >= 0; --m) {
    const XPoly& pm = basis[static_cast<std::size_t>(m)];
    if (pm.degree() != m) throw std::runtime_error("expand_in_basis: basis degree mismatch");
    const Rational c = rest.coeff(m) / pm.leading();
    coeffs[static_cast<std::size_t>(m)] = c;
    if (c != 0) rest -= pm * c;
  }
  if (!rest.is_zero()) throw std::runtime_error("expand_in_basis: nonzero residual");
  return coeffs;
}

RecurrenceCoefficients recurrence_from_expansion(std::span<const XPoly> p, int n) {
  if (n + 1 >= static_cast<int>(p.size()))
    throw std::runtime_error("recurrence_from_expansion: p_{n+1} unavailable");
  const std::vector<Rational> c = expand_in_basis(XPoly::x() * p[static_cast<std::size_t>(n)], p);
  for (int m = 0; m < static_cast<int>(c.size()); ++m) {
    if (m >= n - 1 && m <= n + 1) continue;
    if (c[static_cast<std::size_t>(m)] != 0)
      throw std::runtime_error("recurrence_from_expansion: x p_" + std::to_string(n) +
                               " has a p_" + std::to_string(m) + " component");
  }
  RecurrenceCoefficients out;
  out.A = c[static_cast<std::size_t>(n + 1)];
  out.B = c[static_cast<std::size_t>(n)];
  out.C = n >= 1 ? c[static_cast<std::size_t>(n - 1)] : Rational(0);
  return out;
}

std::vector<Rational> norms_from_recurrence(std::span<const Rational> A,
                                            std::span<const Rational> C) {
  std::vector<Rational> h{Rational(1)};
  for (std::size_t n = 1; n < C.size() && n <= A.size(); ++n) {
    if (A[n - 1] == 0) throw std::domain_error("norms_from_recurrence: A_{n-1} = 0");
    h.push_back(h.back() * C[n] / A[n - 1]);
  }
  return h;
}

// --------------------------------------------------------------- admissibility

namespace {

void check_q(const Rational& q) { require(q > 0 && q < 1, "q must lie in (0, 1)"); }

/// prod q^k != 1 for k in [k_lo, k_hi].
void require_no_resonance(const Rational& product, const Rational& q, int k_lo, int k_hi,
                          const std::string& what) {
  for (int k = k_lo; k <= k_hi; ++k)
    require(product * pow(q, k) != 1, what + " q^" + std::to_string(k) + " = 1");
}

void check_aw(const AwParams& p, int cap) {
  check_q(p.q);
  require(p.a != 0 && p.b != 0 && p.c != 0 && p.d != 0, "Askey-Wilson parameters must be nonzero");
  const std::array<Rational, 10> products = {p.a * p.a, p.b * p.b, p.c * p.c, p.d * p.d,
                                             p.a * p.b, p.a * p.c, p.a * p.d, p.b * p.c,
                                             p.b * p.d, p.c * p.d};
  for (const auto& pr : products) require_no_resonance(pr, p.q, 0, 2 * cap + 2, "pair product");
  require_no_resonance(p.abcd(), p.q, -2, 2 * cap + 4, "abcd");
}

}  // namespace

void check_admissible(const FamilySpec& spec) {
  const int cap = spec.degree_cap;
  require(cap >= 2, "degree cap must be at least 2");
  for (const auto& name : family_parameter_names(spec.id)) (void)spec.param(name);
  switch (spec.id) {
    case FamilyId::AskeyWilson:
      check_aw({spec.param("a"), spec.param("b"), spec.param("c"), spec.param("d"), spec.param("q")},
               cap);
      break;
    case FamilyId::Jacobi:
      require(spec.param("alpha") > -1 && spec.param("beta") > -1, "Jacobi needs alpha, beta > -1");
      break;
    case FamilyId::CqJacobiEmbed49:
    case FamilyId::CqJacobiEmbed09: {
      const Rational& s = spec.param("s");
      require(s > 0 && s < 1, "s must lie in (0, 1)");
      require(spec.param("alpha") > -1 && spec.param("beta") > -1,
              "continuous q-Jacobi needs alpha, beta > -1");
      check_aw(cqjacobi_aw_params(spec, CqJacobiEmbedding::Embed49), cap);
      check_aw(cqjacobi_aw_params(spec, CqJacobiEmbedding::Embed09), cap);
      const Rational& al = spec.param("alpha");
      const Rational& be = spec.param("beta");
      for (int n = 0; n <= cap + 1; ++n) {
        const Rational nn(n);
        for (const Rational& e : std::array<Rational, 2>{nn + (al + be + 1) / 2, nn + (al + be + 2) / 2})
          require(qpow_s4(s, e) != 1, "continuous q-Jacobi A_n denominator vanishes");
        if (n >= 1) {
          for (const Rational& e : std::array<Rational, 2>{nn + (al + be) / 2, nn + (al + be + 1) / 2})
            require(qpow_s4(s, e) != 1, "continuous q-Jacobi C_n denominator vanishes");
        }
      }
      break;
    }
    case FamilyId::CqUltraspherical: {
      const Rational& t = spec.param("t");
      const Rational& s = spec.param("s");
      require(s > 0 && s < 1, "s = q^{1/2} must lie in (0, 1)");
      require(t > -1 && t < 1, "continuous q-ultraspherical needs |t| < 1");
      const Rational q = s * s;
      for (int n = 0; n <= 2 * cap + 2; ++n) require(t * pow(s, n) != 1, "t q^{n/2} = 1");
      break;
    }
    case FamilyId::BigQJacobi: {
      const Rational& a = spec.param("a");
      const Rational& b = spec.param("b");
      const Rational& c = spec.param("c");
      const Rational& q = spec.param("q");
      check_q(q);
      require(a != 0 && c != 0, "big q-Jacobi needs a, c != 0");
      require_no_resonance(a, q, 1, cap + 2, "a");
      require_no_resonance(-c, q, 1, cap + 2, "-c");
      require_no_resonance(a * b, q, 1, 2 * cap + 4, "ab");
      break;
    }
  }
}

FamilyData build_family(const FamilySpec& spec) {
  check_admissible(spec);
  const int cap = spec.degree_cap;
  FamilyData data;
  data.spec = spec;
  const int top = cap + 1;

  switch (spec.id) {
    case FamilyId::AskeyWilson: {
      const AwParams p{spec.param("a"), spec.param("b"), spec.param("c"), spec.param("d"),
                       spec.param("q")};
      for (int n = 0; n <= top; ++n) data.p.push_back(aw_polynomial(n, p));
      break;
    }
    case FamilyId::Jacobi:
      data.p = jacobi_polynomials(spec.param("alpha"), spec.param("beta"), top);
      break;
    case FamilyId::CqJacobiEmbed49:
      for (int n = 0; n <= top; ++n)
        data.p.push_back(cqjacobi_polynomial(n, spec, CqJacobiEmbedding::Embed49));
      break;
    case FamilyId::CqJacobiEmbed09:
      for (int n = 0; n <= top; ++n)
        data.p.push_back(cqjacobi_polynomial(n, spec, CqJacobiEmbedding::Embed09));
      break;
    case FamilyId::CqUltraspherical:
      data.p = cqultra_polynomials(spec, top);
      break;
    case FamilyId::BigQJacobi:
      for (int n = 0; n <= top; ++n)
        data.p.push_back(bigq_polynomial(n, spec.param("a"), spec.param("b"), spec.param("c"),
                                         spec.param("q")));
      break;
  }

  for (int n = 0; n <= top; ++n) {
    require(data.p[static_cast<std::size_t>(n)].degree() == n,
            "p_" + std::to_string(n) + " does not have exact degree n");
  }
  for (int n = 0; n <= cap; ++n) {
    data.k.push_back(data.p[static_cast<std::size_t>(n)].leading());
    const RecurrenceCoefficients rc = recurrence_from_expansion(data.p, n);
    data.A.push_back(rc.A);
    data.B.push_back(rc.B);
    data.C.push_back(rc.C);
    require(rc.A != 0, "A_n = 0");
    if (n >= 1) require(rc.C != 0, "C_" + std::to_string(n) + " = 0 (degenerate norm)");
  }
  data.h = norms_from_recurrence(data.A, data.C);

  switch (spec.id) {
    case FamilyId::Jacobi:
      for (int n = 0; n <= cap; ++n) {
        const auto cf = jacobi_coefficients(n, spec.param("alpha"), spec.param("beta"));
        data.lambda.push_back(cf.lambda);
        data.gamma.push_back(cf.gamma);
      }
      break;
    case FamilyId::BigQJacobi: {
      // Leading coefficient of L(x^n) read off the operator:
      // -(b/c) q^n + q^{-n-2}/(ac) = (1 - ab q^{2n+2}) / (ac q^{n+2}).
      const Rational& a = spec.param("a");
      const Rational& b = spec.param("b");
      const Rational& c = spec.param("c");
      const Rational& q = spec.param("q");
      Rational lambda = 0;
      for (int n = 0; n <= cap; ++n) {
        const Rational g = (kOne - a * b * pow(q, 2 * n + 2)) / (a * c * pow(q, n + 2));
        data.lambda.push_back(lambda);
        data.gamma.push_back(g);
        lambda += g;
      }
      break;
    }
    default: {
      const AwSymbol sym = family_aw_symbol(spec);
      const Rational& Q = sym.step;
      const Rational e4 = sym.top();
      for (int n = 0; n <= cap; ++n) {
        data.lambda.push_back(kTwo * (pow(Q, -n) - kOne) * (kOne - e4 * pow(Q, n - 1)) /
                              (kOne - kOne / Q));
        data.gamma.push_back(kTwo * (e4 * pow(Q, n) - pow(Q, -n)));
      }
      break;
    }
  }
  for (int n = 0; n <= cap; ++n) {
    require(data.gamma[static_cast<std::size_t>(n)] != 0, "gamma_n = 0");
    require(data.h[static_cast<std::size_t>(n)] != 0, "h_n = 0");
    if (n >= 1)
      require(data.gamma[static_cast<std::size_t>(n)] + data.gamma[static_cast<std::size_t>(n - 1)] != 0,
              "gamma_n + gamma_{n-1} = 0");
  }
  return data;
}

}  // namespace awstruct
