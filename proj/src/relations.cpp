#include "awstruct/relations.hpp"

#include <algorithm>
#include <array>

#include "awstruct/inner_product.hpp"
#include "awstruct/qcalculus.hpp"

namespace awstruct {

namespace {

const Rational kOne(1);
const Rational kTwo(2);
const Rational kHalf(1, 2);

constexpr int kMatrixDegree = 12;
constexpr int kSymmetryDegree = 10;

using Coeffs = std::vector<Rational>;

Coeffs perturbed(Coeffs c, int perturb) {
  if (perturb >= 0 && perturb < static_cast<int>(c.size())) c[static_cast<std::size_t>(perturb)] += 1;
  return c;
}

std::optional<Residual> nonzero(const XPoly& f) {
  if (f.is_zero()) return std::nullopt;
  return residual_of(f);
}

std::optional<Residual> nonzero(const LaurentPoly& f) {
  if (f.is_zero()) return std::nullopt;
  return residual_of(f);
}

std::optional<Residual> nonzero(const Coeffs& defects) {
  if (std::all_of(defects.begin(), defects.end(), [](const Rational& r) { return r == 0; }))
    return std::nullopt;
  return Residual{static_cast<int>(defects.size()) - 1, defects};
}

const XPoly& poly(const FamilyContext& ctx, int n) {
  static const XPoly zero;
  if (n < 0) return zero;
  return ctx.data.p.at(static_cast<std::size_t>(n));
}

const Rational& at(const std::vector<Rational>& v, int n) { return v.at(static_cast<std::size_t>(n)); }

/// gamma_{n-1} with the n = 0 term dropped (it multiplies p_{-1} = 0).
Rational gamma_prev(const FamilyContext& ctx, int n) {
  return n >= 1 ? at(ctx.data.gamma, n - 1) : Rational(0);
}

XPoly x_minus(const Rational& b) { return XPoly({-b, kOne}); }

AwParams aw_params(const FamilySpec& spec) {
  return {spec.param("a"), spec.param("b"), spec.param("c"), spec.param("d"), spec.param("q")};
}

/// prod over the six pair products of (1 - pair q^{n-1}).
Rational six_factors(const AwParams& p, int n) {
  Rational out = 1;
  const Rational qn1 = pow(p.q, n - 1);
  for (const Rational& pair : std::array<Rational, 6>{p.a * p.b, p.a * p.c, p.a * p.d, p.b * p.c, p.b * p.d, p.c * p.d})
    out *= kOne - pair * qn1;
  return out;
}

LaurentPoly lz(const FamilyContext& ctx, int n) { return x_to_laurent_sym(poly(ctx, n)); }

/// First nonzero column difference of two operators on degrees 0..max_deg.
std::optional<Residual> matrix_defect(const PolyOperator& lhs, const PolyOperator& rhs, int max_deg) {
  for (int j = 0; j <= max_deg; ++j) {
    const XPoly d = lhs.column(j) - rhs.column(j);
    if (!d.is_zero()) return residual_of(d);
  }
  return std::nullopt;
}

PolyOperator bump_entry(const PolyOperator& op, int perturb) {
  if (perturb < 0) return op;
  std::vector<XPoly> cols = op.columns();
  cols.at(0) += XPoly::constant(kOne);
  return PolyOperator::from_columns(op.name(), op.degree_shift(), std::move(cols));
}

int matrix_degree(const FamilyContext& ctx) { return std::min(kMatrixDegree, ctx.data.cap() - 1); }
int symmetry_degree(const FamilyContext& ctx) { return std::min(kSymmetryDegree, ctx.data.cap() - 1); }

}  // namespace

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Info: return "info";
  }
  return "fail";
}

Residual residual_of(const XPoly& f) { return {f.degree(), f.coeffs()}; }

Residual residual_of(const LaurentPoly& f) { return {f.high(), f.coeffs()}; }

FamilyContext make_context(const FamilySpec& spec, bool with_qdiff) {
  FamilyContext ctx{build_family(spec), family_operators(spec), std::nullopt};
  if (with_qdiff && (spec.id == FamilyId::AskeyWilson || spec.id == FamilyId::BigQJacobi))
    ctx.qdiff = derive_second_order_qdiff(ctx.data);
  return ctx;
}

// ------------------------------------------------------------ structure

std::optional<Residual> check_structure(const FamilyContext& ctx, int n, int perturb) {
  const auto& d = ctx.data;
  const Coeffs c = perturbed({at(d.gamma, n) * at(d.A, n), gamma_prev(ctx, n) * at(d.C, n)}, perturb);
  return nonzero(ctx.ops.L.apply(poly(ctx, n)) - poly(ctx, n + 1) * c[0] + poly(ctx, n - 1) * c[1]);
}

std::optional<Residual> check_structure_explicit(std::string_view id, const FamilyContext& ctx,
                                                 int n, int perturb) {
  const FamilySpec& spec = ctx.data.spec;
  const Rational nn(n);
  XPoly lhs;
  Coeffs c;  // L p_n = c[0] p_{n+1} + c[1] p_{n-1}
  if (id == "eq18") {
    const AwParams p = aw_params(spec);
    const Rational abcd = p.abcd();
    const Rational den = kOne - abcd * pow(p.q, 2 * n - 1);
    c = {-(kOne - abcd * pow(p.q, n - 1)) / (pow(p.q, n) * den),
         six_factors(p, n) * (kOne - pow(p.q, n)) / (pow(p.q, n - 1) * den)};
    lhs = ctx.ops.L.apply(poly(ctx, n));
  } else if (id == "eq26") {
    const Rational& al = spec.param("alpha");
    const Rational& be = spec.param("beta");
    const Rational den = 2 * nn + al + be + 1;
    c = {-(nn + 1) * (nn + al + be + 1) / den, (nn + al) * (nn + be) / den};
    lhs = ctx.ops.L.apply(poly(ctx, n));
  } else if (id == "eq40") {
    const BigQStructureCoefficients s = bigq_structure_coefficients(n, spec);
    c = {s.up, s.down};
    lhs = bigq_L(spec, 0).apply(poly(ctx, n));
  } else if (id == "eq54") {
    const Rational& t = spec.param("t");
    const Rational& s = spec.param("s");
    const Rational den = kOne - t * pow(s, 2 * n);
    c = {-(kOne - t * pow(s, 2 * n + 1)) * (kOne - pow(s, 2 * n + 2)) / (pow(s, n) * den),
         (kOne - t * pow(s, 2 * n - 1)) * (kOne - t * t * pow(s, 2 * n - 2)) / (pow(s, n - 1) * den)};
    lhs = laurent_sym_to_x(apply_cqultra_L(spec, lz(ctx, n)));
  } else if (id == "eq59" || id == "eq59t") {
    const bool tilde = id == "eq59t";
    const CqJacobiClosedForms cf = cqjacobi_coefficients(n, spec);
    const CqJacobiClosedForms prev = cqjacobi_coefficients(std::max(n - 1, 0), spec);
    const Rational g = tilde ? cf.gamma_tilde : cf.gamma;
    const Rational gp = n >= 1 ? (tilde ? prev.gamma_tilde : prev.gamma) : Rational(0);
    c = {g * cf.A, -gp * cf.C};
    lhs = (tilde ? cqjacobi_Ltilde(spec, 0) : cqjacobi_L(spec, 0)).apply(poly(ctx, n));
  } else {
    throw std::invalid_argument("check_structure_explicit: unknown identity " + std::string(id));
  }
  c = perturbed(std::move(c), perturb);
  return nonzero(lhs - poly(ctx, n + 1) * c[0] - poly(ctx, n - 1) * c[1]);
}

std::optional<Residual> check_classic_jacobi_structure(const FamilyContext& ctx, int n, int perturb) {
  const Rational& al = ctx.data.spec.param("alpha");
  const Rational& be = ctx.data.spec.param("beta");
  const Rational nn(n);
  const Rational s = al + be;
  const Coeffs c = perturbed(
      {-2 * nn * (nn + 1) * (nn + s + 1) / ((2 * nn + s + 1) * (2 * nn + s + 2)),
       2 * nn * (nn + s + 1) * (al - be) / ((2 * nn + s) * (2 * nn + s + 2)),
       2 * (nn + al) * (nn + be) * (nn + s + 1) / ((2 * nn + s) * (2 * nn + s + 1))},
      perturb);
  const XPoly lhs = XPoly({kOne, Rational(0), -kOne}) * poly(ctx, n).derivative();
  return nonzero(lhs - poly(ctx, n + 1) * c[0] - poly(ctx, n) * c[1] - poly(ctx, n - 1) * c[2]);
}

// ---------------------------------------------------- lowering / raising

std::optional<Residual> check_lowering(const FamilyContext& ctx, int n, int perturb) {
  const auto& d = ctx.data;
  const Rational g = at(d.gamma, n);
  const Coeffs c = perturbed({g, at(d.B, n), (g + gamma_prev(ctx, n)) * at(d.C, n)}, perturb);
  const XPoly& pn = poly(ctx, n);
  return nonzero(ctx.ops.L.apply(pn) - x_minus(c[1]) * pn * c[0] + poly(ctx, n - 1) * c[2]);
}

std::optional<Residual> check_raising(const FamilyContext& ctx, int n, int perturb) {
  const auto& d = ctx.data;
  const Rational gp = gamma_prev(ctx, n);
  const Coeffs c = perturbed({gp, at(d.B, n), (at(d.gamma, n) + gp) * at(d.A, n)}, perturb);
  const XPoly& pn = poly(ctx, n);
  return nonzero(ctx.ops.L.apply(pn) + x_minus(c[1]) * pn * c[0] - poly(ctx, n + 1) * c[2]);
}

namespace {

struct AwExplicit {
  Rational low_slope, low_rhs, raise_slope, raise_rhs, B;
};

AwExplicit aw_explicit(const FamilyContext& ctx, int n) {
  const AwParams p = aw_params(ctx.data.spec);
  const Rational abcd = p.abcd();
  const Rational& q = p.q;
  AwExplicit out;
  out.low_slope = abcd * pow(q, n) - pow(q, -n);
  out.low_rhs = six_factors(p, n) * (kOne + q) * (kOne - pow(q, n)) /
                (pow(q, n) * (kOne - abcd * pow(q, 2 * n - 2)));
  out.raise_slope = abcd * pow(q, n - 1) - pow(q, 1 - n);
  out.raise_rhs = -(kOne + q) * (kOne - abcd * pow(q, n - 1)) / (pow(q, n) * (kOne - abcd * pow(q, 2 * n)));
  out.B = aw_coefficients(n, p).B;
  return out;
}

/// Left-hand side minus right-hand side of the explicit lowering relation;
/// (z + 1/z - 2B) = 2(x - B).
XPoly aw_lowering_residual(const FamilyContext& ctx, int n, const Coeffs& c) {
  const XPoly& pn = poly(ctx, n);
  return ctx.ops.L.apply(pn) - x_minus(c[1]) * pn * (kTwo * c[0]) - poly(ctx, n - 1) * c[2];
}

XPoly aw_raising_residual(const FamilyContext& ctx, int n, const Coeffs& c) {
  const XPoly& pn = poly(ctx, n);
  return ctx.ops.L.apply(pn) + x_minus(c[1]) * pn * (kTwo * c[0]) - poly(ctx, n + 1) * c[2];
}

}  // namespace

std::optional<Residual> check_aw_lowering(const FamilyContext& ctx, int n, int perturb) {
  const AwExplicit e = aw_explicit(ctx, n);
  return nonzero(aw_lowering_residual(ctx, n, perturbed({e.low_slope, e.B, e.low_rhs}, perturb)));
}

std::optional<Residual> check_aw_raising(const FamilyContext& ctx, int n, int perturb) {
  const AwExplicit e = aw_explicit(ctx, n);
  return nonzero(aw_raising_residual(ctx, n, perturbed({e.raise_slope, e.B, e.raise_rhs}, perturb)));
}

std::optional<Residual> check_bangerezako_variant(const FamilyContext& ctx, int n, int perturb) {
  const AwExplicit e = aw_explicit(ctx, n);
  const AwSymbol sym = family_aw_symbol(ctx.data.spec);
  const Rational& q = sym.step;
  // Slots: lambda_n, lowering right-hand coefficient, raising right-hand coefficient.
  const Coeffs c = perturbed({at(ctx.data.lambda, n), e.low_rhs, e.raise_rhs}, perturb);
  const LaurentPoly pn = lz(ctx, n);
  const LaurentPoly eigen_defect = apply_aw_D(sym, pn) - pn * c[0];
  // 1/2 (1 - 1/q)(z - q/z), not symmetric.
  const LaurentPoly g = LaurentPoly(-1, {-q, Rational(0), kOne}) * (kHalf * (kOne - kOne / q));
  const LaurentPoly added = g * eigen_defect;

  const LaurentPoly low = x_to_laurent_sym(aw_lowering_residual(ctx, n, {e.low_slope, e.B, c[1]}));
  if (auto r = nonzero(low + added)) return r;
  const LaurentPoly raise = x_to_laurent_sym(aw_raising_residual(ctx, n, {e.raise_slope, e.B, c[2]}));
  return nonzero(raise + added);
}

// ---------------------------------------------------- spectral, bispectral

std::optional<Residual> check_eigen(const FamilyContext& ctx, int n, int perturb) {
  const Coeffs c = perturbed({at(ctx.data.lambda, n)}, perturb);
  return nonzero(ctx.ops.D.apply(poly(ctx, n)) - poly(ctx, n) * c[0]);
}

std::optional<Residual> check_bispectral(const FamilyContext& ctx, int n, int perturb) {
  const auto& d = ctx.data;
  const Coeffs c = perturbed({at(d.A, n), at(d.C, n)}, perturb);
  const XPoly& pn = poly(ctx, n);
  const XPoly x = XPoly::x();
  const XPoly lhs = ctx.ops.D.apply(x * pn) - x * ctx.ops.D.apply(pn);
  const Rational lam = at(d.lambda, n);
  const Rational lam_prev = n >= 1 ? at(d.lambda, n - 1) : Rational(0);
  const XPoly rhs = poly(ctx, n + 1) * (c[0] * (at(d.lambda, n + 1) - lam)) +
                    poly(ctx, n - 1) * (c[1] * (lam_prev - lam));
  return nonzero(lhs - rhs);
}

Residual residual_q_bispectral(const FamilyContext& ctx, int n, int perturb) {
  const auto& d = ctx.data;
  const Rational q = ctx.data.spec.q();
  const Coeffs c = perturbed({at(d.lambda, n)}, perturb);
  const XPoly& pn = poly(ctx, n);
  const XPoly x = XPoly::x();
  const XPoly lhs = ctx.ops.D.apply(x * pn) * q - x * ctx.ops.D.apply(pn);
  const Rational lam_prev = n >= 1 ? at(d.lambda, n - 1) : Rational(0);
  // (J Lambda p)(n) and (Lambda J p)(n).
  const XPoly j_lambda = poly(ctx, n + 1) * (at(d.A, n) * at(d.lambda, n + 1)) +
                         pn * (at(d.B, n) * c[0]) + poly(ctx, n - 1) * (at(d.C, n) * lam_prev);
  const XPoly lambda_j = (poly(ctx, n + 1) * at(d.A, n) + pn * at(d.B, n) + poly(ctx, n - 1) * at(d.C, n)) * c[0];
  const XPoly r = lhs - (j_lambda * q - lambda_j);
  return residual_of(r);
}

// ------------------------------------------------------------- Sklyanin

std::optional<Residual> check_sklyanin(const AwParams& p, const Rational& e, int max_deg, int perturb) {
  const Rational& q = p.q;
  const int cap = max_deg + 1;
  auto L = [&](const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    return aw_L(aw_symbol({a, b, c, d, q}), cap);
  };
  const PolyOperator lhs = compose(L(p.a, p.b, p.c * e, p.d / e), L(q * p.a, q * p.b, p.c / q, p.d / q));
  const PolyOperator rhs = compose(L(p.a, p.b, p.c, p.d), L(q * p.a, q * p.b, p.c * e / q, p.d / (e * q)));
  return matrix_defect(lhs, bump_entry(rhs, perturb), max_deg);
}

// ---------------------------------------------- continuous q-ultraspherical

namespace {

struct CquTerms {
  Rational t, s;
  LaurentPoly up, down, here, prev, next;  // C_n[sz], C_n[z/s], C_n, C_{n-1}, C_{n+1}
};

CquTerms cqu_terms(const FamilyContext& ctx, int n) {
  CquTerms t;
  t.t = ctx.data.spec.param("t");
  t.s = ctx.data.spec.param("s");
  t.here = lz(ctx, n);
  t.prev = lz(ctx, n - 1);
  t.next = lz(ctx, n + 1);
  t.up = dilate(t.here, t.s);
  t.down = dilate(t.here, kOne / t.s);
  return t;
}

const LaurentPoly& zz() {
  static const LaurentPoly value(-1, {Rational(-1), Rational(0), kOne});
  return value;
}

const LaurentPoly& z_plus() {
  static const LaurentPoly value(-1, {kOne, Rational(0), kOne});
  return value;
}

LaurentPoly lp(int low, std::vector<Rational> c) { return LaurentPoly(low, std::move(c)); }

LaurentPoly lhs51(const CquTerms& T, int n) {
  // -(t - z^-2) C[sz] + (t - z^2) C[z/s], over z - 1/z.
  const LaurentPoly num = -(lp(-2, {Rational(-1), 0, T.t}) * T.up) + lp(0, {T.t, 0, Rational(-1)}) * T.down;
  return divide_exact(num, zz()) + z_plus() * T.here * pow(T.s, -n);
}

LaurentPoly lhs52(const CquTerms& T, int n) {
  const LaurentPoly num = -(lp(0, {Rational(-1), 0, T.t}) * T.up) + lp(-2, {T.t, 0, Rational(-1)}) * T.down;
  return divide_exact(num, zz()) + z_plus() * T.here * pow(T.s, -n);
}

LaurentPoly lhs53(const CquTerms& T) {
  return lp(-1, {kOne, 0, -T.t}) * T.up + lp(-1, {-T.t, 0, kOne}) * T.down;
}

LaurentPoly lhs55(const CquTerms& T) {
  const LaurentPoly num = -(lp(0, {kOne, 0, -T.t}) * lp(-2, {kOne, 0, kOne}) * T.up) +
                          lp(-2, {-T.t, 0, kOne}) * lp(0, {kOne, 0, kOne}) * T.down;
  return divide_exact(num, zz());
}

}  // namespace

std::optional<Residual> check_cqultra_web(CquIdentity which, const FamilyContext& ctx, int n, int perturb) {
  const CquTerms T = cqu_terms(ctx, n);
  const Rational& s = T.s;
  const Rational& t = T.t;
  const Rational sn = pow(s, n);
  const Rational s_inv_n = pow(s, -n);
  const Rational den = kOne - t * pow(s, 2 * n);
  switch (which) {
    case CquIdentity::Eq51: {
      const Coeffs c = perturbed({s_inv_n - t * t * pow(s, n - 2)}, perturb);
      return nonzero(lhs51(T, n) - T.prev * c[0]);
    }
    case CquIdentity::Eq52: {
      const Coeffs c = perturbed({s_inv_n - pow(s, n + 2)}, perturb);
      return nonzero(lhs52(T, n) - T.next * c[0]);
    }
    case CquIdentity::Eq53: {
      const Coeffs c = perturbed({s_inv_n * (kOne - pow(s, 2 * n + 2)),
                                  s_inv_n * (kOne - t * t * pow(s, 2 * n - 2))},
                                 perturb);
      return nonzero(lhs53(T) - T.next * c[0] + T.prev * c[1]);
    }
    case CquIdentity::Eq55: {
      const Rational f = s_inv_n + t * sn;
      const Coeffs c = perturbed({f * (kOne - pow(s, 2 * n + 2)) / den,
                                  f * (kOne - t * t * pow(s, 2 * n - 2)) / den},
                                 perturb);
      return nonzero(lhs55(T) - T.next * c[0] - T.prev * c[1]);
    }
    case CquIdentity::Recurrence: {
      const Coeffs c = perturbed({(kOne - pow(s, 2 * n + 2)) / den,
                                  (kOne - t * t * pow(s, 2 * n - 2)) / den},
                                 perturb);
      return nonzero(z_plus() * T.here - T.next * c[0] - T.prev * c[1]);
    }
    case CquIdentity::QDifference: {
      // Multiplied through by (1 - z^2)(1 - z^-2).
      const Coeffs c = perturbed({s_inv_n + sn * t}, perturb);
      const LaurentPoly one_minus_z2 = lp(0, {kOne, 0, Rational(-1)});
      const LaurentPoly one_minus_zm2 = lp(-2, {Rational(-1), 0, kOne});
      const LaurentPoly lhs = lp(0, {kOne, 0, -t}) * one_minus_zm2 * T.up +
                              lp(-2, {-t, 0, kOne}) * one_minus_z2 * T.down;
      return nonzero(lhs - one_minus_z2 * one_minus_zm2 * T.here * c[0]);
    }
    case CquIdentity::Combination:
    case CquIdentity::CorrectedCombination: {
      Coeffs c;
      if (which == CquIdentity::Combination) {
        const Rational q = s * s;
        c = {kHalf * (q - kOne), kHalf * (q + kOne)};
      } else {
        c = {kHalf * (s - kOne), -kHalf * (s + kOne)};
      }
      c = perturbed(std::move(c), perturb);
      const LaurentPoly lhs54 = apply_cqultra_L(ctx.data.spec, T.here);
      return nonzero(lhs54 - lhs55(T) * c[0] - lhs53(T) * c[1]);
    }
  }
  return std::nullopt;
}

// -------------------------------------------------------- big q-Jacobi chain

namespace {

const QDifferenceEquation& require_qdiff(const FamilyContext& ctx) {
  if (!ctx.qdiff) throw std::logic_error("context was built without the q-difference equation");
  return *ctx.qdiff;
}

XPoly dq_lhs(const FamilyContext& ctx, int n) {
  const FamilySpec& spec = ctx.data.spec;
  const XPoly T = XPoly({-kOne, kOne}) * XPoly({spec.param("c"), spec.param("b")});
  return T * q_derivative(poly(ctx, n), spec.param("q"));
}

}  // namespace

std::optional<Residual> check_reduction_eq42(const FamilyContext& ctx, int n, int perturb) {
  const ReducedStructure r = reduce_bigq_structure(ctx.data, require_qdiff(ctx), n);
  const Coeffs c = perturbed({r.alpha, r.delta, r.beta, r.gamma}, perturb);
  const XPoly rhs = poly(ctx, n + 1) * c[0] + XPoly({c[2], c[1]}) * poly(ctx, n) + poly(ctx, n - 1) * c[3];
  return nonzero(dq_lhs(ctx, n) - rhs);
}

std::optional<Residual> check_reduction_eq41(const FamilyContext& ctx, int n, int perturb) {
  const ReducedStructure r = reduce_bigq_structure(ctx.data, require_qdiff(ctx), n);
  const DqStructure s = bigq_dq_structure(ctx.data, r, n);
  const Coeffs c = perturbed({s.a, s.b, s.c}, perturb);
  const XPoly rhs = poly(ctx, n + 1) * c[0] + poly(ctx, n) * c[1] + poly(ctx, n - 1) * c[2];
  return nonzero(dq_lhs(ctx, n) - rhs);
}

// ------------------------------------------------------------- registry

bool IdentityInfo::applies_to(FamilyId id) const {
  return std::find(families.begin(), families.end(), id) != families.end();
}

const std::vector<IdentityInfo>& identity_registry() {
  using F = FamilyId;
  const std::vector<F> all(kAllFamilies.begin(), kAllFamilies.end());
  const std::vector<F> aw{F::AskeyWilson};
  const std::vector<F> cqj{F::CqJacobiEmbed49, F::CqJacobiEmbed09};
  const std::vector<F> cqu{F::CqUltraspherical};
  const std::vector<F> bigq{F::BigQJacobi};
  const std::vector<F> jac{F::Jacobi};
  const std::vector<F> z_side{F::AskeyWilson, F::CqJacobiEmbed49, F::CqJacobiEmbed09, F::CqUltraspherical};
  const auto D = Scope::PerDegree;
  const auto S = Scope::PerSample;
  static const std::vector<IdentityInfo> registry = {
      // id, families, scope, n_min, expect, slots, needs_qdiff
      {"recurrence-coefficients", {F::AskeyWilson, F::Jacobi, F::CqJacobiEmbed49, F::CqJacobiEmbed09, F::CqUltraspherical}, D, 0, Expect::Zero, 2, false},
      {"dual-path", z_side, D, 0, Expect::Zero, 1, false},
      {"eq28", all, D, 1, Expect::Zero, 2, false},
      {"eq57", all, D, 0, Expect::Zero, 1, false},
      {"eq18", aw, D, 1, Expect::Zero, 2, false},
      {"eq26", jac, D, 1, Expect::Zero, 2, false},
      {"eq02", jac, D, 1, Expect::Zero, 3, false},
      {"eq40", bigq, D, 1, Expect::Zero, 2, false},
      {"eq54", cqu, D, 1, Expect::Zero, 2, false},
      {"eq59", cqj, D, 1, Expect::Zero, 2, false},
      {"eq59t", cqj, D, 1, Expect::Zero, 2, false},
      {"eq31", all, D, 1, Expect::Zero, 3, false},
      {"eq32", all, D, 1, Expect::Zero, 3, false},
      {"eq76", aw, D, 1, Expect::Zero, 3, false},
      {"eq77", aw, D, 1, Expect::Zero, 3, false},
      {"bangerezako", aw, D, 1, Expect::Zero, 3, false},
      {"eq64", all, D, 0, Expect::Zero, 1, false},
      {"eq66", all, D, 0, Expect::Zero, 1, false},
      {"eq71", all, D, 0, Expect::Zero, 2, false},
      {"eq73", aw, D, 0, Expect::Informational, 1, false},
      {"eq65", all, S, 0, Expect::Zero, 1, false},
      {"eq67", all, S, 0, Expect::Zero, 1, false},
      {"eq74", jac, S, 0, Expect::Zero, 1, false},
      {"sklyanin", aw, S, 0, Expect::Zero, 1, false},
      {"eq24", all, S, 0, Expect::Zero, 1, false},
      {"symmetry-D", all, S, 0, Expect::Zero, 1, false},
      {"symmetry-X", all, S, 0, Expect::Zero, 1, false},
      {"eq53-nonskew", cqu, S, 0, Expect::Nonzero, 1, false},
      {"l-specialization", {F::CqJacobiEmbed49, F::CqJacobiEmbed09, F::CqUltraspherical}, S, 0, Expect::Zero, 1, false},
      {"eq51", cqu, D, 1, Expect::Zero, 1, false},
      {"eq52", cqu, D, 1, Expect::Zero, 1, false},
      {"eq53", cqu, D, 1, Expect::Zero, 2, false},
      {"eq55", cqu, D, 1, Expect::Zero, 2, false},
      {"cqu-recurrence", cqu, D, 1, Expect::Zero, 2, false},
      {"cqu-qdiff", cqu, D, 1, Expect::Zero, 1, false},
      {"cqu-combination", cqu, D, 1, Expect::Zero, 2, false},
      {"cqu-combination-corrected", cqu, D, 1, Expect::Zero, 2, false},
      {"qdiff", {F::AskeyWilson, F::BigQJacobi}, S, 0, Expect::Zero, 1, true},
      {"eq42", bigq, D, 0, Expect::Zero, 4, true},
      {"eq41", bigq, D, 0, Expect::Zero, 3, true},
  };
  return registry;
}

const IdentityInfo* find_identity(std::string_view id) {
  for (const auto& info : identity_registry())
    if (info.id == id) return &info;
  return nullptr;
}

int max_degree_index(const FamilyContext& ctx) { return ctx.data.cap() - 1; }

namespace {

std::optional<Residual> recurrence_coefficients(const FamilyContext& ctx, int n, int perturb) {
  const auto& d = ctx.data;
  const FamilySpec& spec = d.spec;
  Coeffs closed;  // slots: A, C, then family extras
  Coeffs data{at(d.A, n), at(d.C, n)};
  switch (spec.id) {
    case FamilyId::AskeyWilson: {
      const AwClosedForms cf = aw_coefficients(n, aw_params(spec));
      closed = {cf.A, cf.C, cf.B, cf.h, cf.k};
      data.insert(data.end(), {at(d.B, n), at(d.h, n), at(d.k, n)});
      break;
    }
    case FamilyId::Jacobi: {
      const JacobiClosedForms cf = jacobi_coefficients(n, spec.param("alpha"), spec.param("beta"));
      closed = {cf.A, cf.C, cf.B};
      data.push_back(at(d.B, n));
      break;
    }
    case FamilyId::CqJacobiEmbed49:
    case FamilyId::CqJacobiEmbed09: {
      const CqJacobiClosedForms cf = cqjacobi_coefficients(n, spec);
      closed = {cf.A, cf.C};
      break;
    }
    case FamilyId::CqUltraspherical: {
      const CqUltraClosedForms cf = cqultra_coefficients(n, spec);
      closed = {cf.A, cf.C, cf.B};
      data.push_back(at(d.B, n));
      break;
    }
    case FamilyId::BigQJacobi: return std::nullopt;
  }
  closed = perturbed(std::move(closed), perturb);
  Coeffs defects;
  for (std::size_t i = 0; i < closed.size(); ++i) defects.push_back(data[i] - closed[i]);
  return nonzero(defects);
}

/// nullopt when the sample has no second construction route.
std::optional<std::optional<Residual>> dual_path(const FamilyContext& ctx, int n, int perturb) {
  const FamilySpec& spec = ctx.data.spec;
  XPoly other;
  switch (spec.id) {
    case FamilyId::AskeyWilson:
      other = aw_polynomials_by_recurrence(aw_params(spec), n).at(static_cast<std::size_t>(n));
      break;
    case FamilyId::CqJacobiEmbed49:
      other = cqjacobi_polynomial(n, spec, CqJacobiEmbedding::Embed09);
      break;
    case FamilyId::CqJacobiEmbed09:
      other = cqjacobi_polynomial(n, spec, CqJacobiEmbedding::Embed49);
      break;
    case FamilyId::CqUltraspherical: {
      auto p = cqultra_polynomial_from_aw(n, spec);
      if (!p) return std::nullopt;
      other = *p;
      break;
    }
    default: return std::nullopt;
  }
  if (perturb == 0) other += XPoly::constant(kOne);
  return nonzero(poly(ctx, n) - other);
}

std::optional<Residual> eq57(const FamilyContext& ctx, int n, int perturb) {
  const Coeffs c = perturbed({at(ctx.data.gamma, n)}, perturb);
  return nonzero(Coeffs{ctx.ops.L.column(n).coeff(n + 1) - c[0]});
}

std::optional<Residual> eq66(const FamilyContext& ctx, int n, int perturb) {
  const auto& d = ctx.data;
  const Coeffs c = perturbed({at(d.gamma, n)}, perturb);
  return nonzero(Coeffs{c[0] - (at(d.lambda, n + 1) - at(d.lambda, n))});
}

std::optional<Residual> symmetry_check(const PolyOperator& op, const FamilyContext& ctx, bool skew,
                                       int perturb) {
  const PolyOperator tested = bump_entry(op, perturb);
  const int deg = symmetry_degree(ctx);
  const auto defect = skew ? skew_symmetry_defect(tested, ctx.data, deg) : symmetry_defect(tested, ctx.data, deg);
  if (!defect) return std::nullopt;
  return Residual{defect->i, defect->row};
}

/// The family's L built from its own display against the specialized
/// Askey-Wilson operator.
std::optional<Residual> l_specialization(const FamilyContext& ctx, int perturb) {
  const FamilySpec& spec = ctx.data.spec;
  const int deg = matrix_degree(ctx);
  const int cap = deg + 1;
  switch (spec.id) {
    case FamilyId::CqJacobiEmbed49:
    case FamilyId::CqJacobiEmbed09: {
      const PolyOperator l = bump_entry(cqjacobi_L(spec, cap), perturb);
      if (auto r = matrix_defect(l, aw_L(aw_symbol(cqjacobi_aw_params(spec, CqJacobiEmbedding::Embed49)), cap), deg))
        return r;
      return matrix_defect(cqjacobi_Ltilde(spec, cap),
                           aw_L(aw_symbol(cqjacobi_aw_params(spec, CqJacobiEmbedding::Embed09)), cap), deg);
    }
    case FamilyId::CqUltraspherical: {
      const PolyOperator l = bump_entry(cqultra_L(spec, cap), perturb);
      if (auto r = matrix_defect(l, aw_L(family_aw_symbol(spec), cap), deg)) return r;
      Rational u, r;
      if (rational_sqrt(spec.param("t"), &u) && rational_sqrt(spec.param("s"), &r)) {
        const AwParams p{u, -u, r, -r, spec.param("s")};
        return matrix_defect(l, aw_L(aw_symbol(p), cap), deg);
      }
      return std::nullopt;
    }
    default: break;
  }
  return std::nullopt;
}

/// Eigenvalues of the derived q-difference equation against the family's
/// lambda_n (lambda_n = lambda_1 * eigen_n).
std::optional<Residual> qdiff_check(const FamilyContext& ctx, int perturb) {
  const QDifferenceEquation& eq = require_qdiff(ctx);
  Coeffs eigen = eq.eigen;
  if (perturb == 0 && eigen.size() > 2) eigen[2] += 1;
  const Rational scale = at(ctx.data.lambda, 1);
  Coeffs defects;
  for (int n = 0; n <= ctx.data.cap(); ++n)
    defects.push_back(at(ctx.data.lambda, n) - scale * eigen.at(static_cast<std::size_t>(n)));
  return nonzero(defects);
}

VerificationReport make_report(const IdentityInfo& info, const FamilyContext& ctx,
                               std::optional<int> n, std::optional<Residual> residual) {
  VerificationReport r;
  r.identity_id = std::string(info.id);
  r.family = ctx.data.id();
  r.params = ctx.data.spec.params;
  r.n = n;
  switch (info.expect) {
    case Expect::Zero: r.status = residual ? Status::Fail : Status::Pass; break;
    case Expect::Nonzero: r.status = residual ? Status::Pass : Status::Fail; break;
    case Expect::Informational: r.status = Status::Info; break;
  }
  r.residual = std::move(residual);
  return r;
}

std::optional<Residual> per_degree(std::string_view id, const FamilyContext& ctx, int n, int perturb) {
  if (id == "recurrence-coefficients") return recurrence_coefficients(ctx, n, perturb);
  if (id == "eq28") return check_structure(ctx, n, perturb);
  if (id == "eq57") return eq57(ctx, n, perturb);
  if (id == "eq18" || id == "eq26" || id == "eq40" || id == "eq54" || id == "eq59" || id == "eq59t")
    return check_structure_explicit(id, ctx, n, perturb);
  if (id == "eq02") return check_classic_jacobi_structure(ctx, n, perturb);
  if (id == "eq31") return check_lowering(ctx, n, perturb);
  if (id == "eq32") return check_raising(ctx, n, perturb);
  if (id == "eq76") return check_aw_lowering(ctx, n, perturb);
  if (id == "eq77") return check_aw_raising(ctx, n, perturb);
  if (id == "bangerezako") return check_bangerezako_variant(ctx, n, perturb);
  if (id == "eq64") return check_eigen(ctx, n, perturb);
  if (id == "eq66") return eq66(ctx, n, perturb);
  if (id == "eq71") return check_bispectral(ctx, n, perturb);
  if (id == "eq73") {
    Residual r = residual_q_bispectral(ctx, n, perturb);
    if (r.coeffs.empty()) return std::nullopt;
    return r;
  }
  if (id == "eq51") return check_cqultra_web(CquIdentity::Eq51, ctx, n, perturb);
  if (id == "eq52") return check_cqultra_web(CquIdentity::Eq52, ctx, n, perturb);
  if (id == "eq53") return check_cqultra_web(CquIdentity::Eq53, ctx, n, perturb);
  if (id == "eq55") return check_cqultra_web(CquIdentity::Eq55, ctx, n, perturb);
  if (id == "cqu-recurrence") return check_cqultra_web(CquIdentity::Recurrence, ctx, n, perturb);
  if (id == "cqu-qdiff") return check_cqultra_web(CquIdentity::QDifference, ctx, n, perturb);
  if (id == "cqu-combination") return check_cqultra_web(CquIdentity::Combination, ctx, n, perturb);
  if (id == "cqu-combination-corrected")
    return check_cqultra_web(CquIdentity::CorrectedCombination, ctx, n, perturb);
  if (id == "eq42") return check_reduction_eq42(ctx, n, perturb);
  if (id == "eq41") return check_reduction_eq41(ctx, n, perturb);
  throw std::invalid_argument("unknown degree-indexed identity " + std::string(id));
}

}  // namespace

std::vector<VerificationReport> run_identity(const IdentityInfo& info, const FamilyContext& ctx,
                                             int n_max, int perturb) {
  std::vector<VerificationReport> out;
  if (!info.applies_to(ctx.data.id())) return out;
  const std::string_view id = info.id;

  if (info.scope == Scope::PerDegree) {
    const int top = std::min(n_max, max_degree_index(ctx));
    for (int n = info.n_min; n <= top; ++n) {
      if (id == "dual-path") {
        auto r = dual_path(ctx, n, perturb);
        if (!r) return out;
        out.push_back(make_report(info, ctx, n, std::move(*r)));
        continue;
      }
      out.push_back(make_report(info, ctx, n, per_degree(id, ctx, n, perturb)));
    }
    return out;
  }

  const auto& ops = ctx.ops;
  const int deg = matrix_degree(ctx);
  if (id == "eq65") {
    out.push_back(make_report(info, ctx, std::nullopt,
                              matrix_defect(commutator(ops.D, ops.X), bump_entry(ops.L, perturb), deg)));
  } else if (id == "eq67") {
    const PolyOperator diff = difference(bump_entry(d_from_l(ops.L), perturb), ops.D);
    std::optional<Residual> r;
    if (!identity_multiple(diff, deg)) r = matrix_defect(diff, scaled(identity_operator(deg), diff.column(0).coeff(0)), deg);
    out.push_back(make_report(info, ctx, std::nullopt, std::move(r)));
  } else if (id == "eq74") {
    const XPoly f0 = XPoly({kOne + (perturb == 0 ? kOne : Rational(0)), Rational(0), -kOne});
    out.push_back(make_report(info, ctx, std::nullopt,
                              matrix_defect(commutator(ops.X, ops.L),
                                            multiplication_operator(-f0, ops.L.cap()), deg)));
  } else if (id == "sklyanin") {
    const AwParams p = aw_params(ctx.data.spec);
    for (const Rational& e : {Rational(2), Rational(3), Rational(1, 2)}) {
      VerificationReport r = make_report(info, ctx, std::nullopt, check_sklyanin(p, e, deg, perturb));
      r.params["e"] = e;
      out.push_back(std::move(r));
    }
  } else if (id == "eq24") {
    out.push_back(make_report(info, ctx, std::nullopt, symmetry_check(ops.L, ctx, true, perturb)));
  } else if (id == "symmetry-D") {
    // Bumping the (0, 0) entry of a symmetric operator keeps it symmetric; bump (0, 1).
    PolyOperator d = ops.D;
    if (perturb >= 0) {
      std::vector<XPoly> cols = d.columns();
      cols.at(1) += XPoly::constant(kOne);
      d = PolyOperator::from_columns(d.name(), d.degree_shift(), std::move(cols));
    }
    out.push_back(make_report(info, ctx, std::nullopt, symmetry_check(d, ctx, false, -1)));
  } else if (id == "symmetry-X") {
    PolyOperator x = ops.X;
    if (perturb >= 0) {
      std::vector<XPoly> cols = x.columns();
      cols.at(1) += XPoly::constant(kOne);
      x = PolyOperator::from_columns(x.name(), x.degree_shift(), std::move(cols));
    }
    out.push_back(make_report(info, ctx, std::nullopt, symmetry_check(x, ctx, false, -1)));
  } else if (id == "eq53-nonskew") {
    // The perturbation swaps in the skew-symmetric operator, which must fail.
    const int cap = symmetry_degree(ctx) + 1;
    const PolyOperator op = perturb >= 0 ? cqultra_L(ctx.data.spec, cap) : cqultra_nonskew_L(ctx.data.spec, cap);
    out.push_back(make_report(info, ctx, std::nullopt, symmetry_check(op, ctx, true, -1)));
  } else if (id == "l-specialization") {
    out.push_back(make_report(info, ctx, std::nullopt, l_specialization(ctx, perturb)));
  } else if (id == "qdiff") {
    out.push_back(make_report(info, ctx, std::nullopt, qdiff_check(ctx, perturb)));
  } else {
    throw std::invalid_argument("unknown identity " + std::string(id));
  }
  return out;
}

}  // namespace awstruct
