#include "awstruct/operators.hpp"

#include <algorithm>
#include <utility>

namespace awstruct {

namespace {

const Rational kOne(1);
const Rational kTwo(2);

XPoly monomial(int j) { return XPoly::monomial(kOne, j); }

/// z - 1/z.
const LaurentPoly& z_minus_inverse() {
  static const LaurentPoly value(-1, {Rational(-1), Rational(0), kOne});
  return value;
}

}  // namespace

// ------------------------------------------------------------- PolyOperator

PolyOperator::PolyOperator(std::string name, int degree_shift, Action action, int cap)
    : name_(std::move(name)), degree_shift_(degree_shift), action_(std::move(action)) {
  columns_.reserve(static_cast<std::size_t>(cap + 1));
  for (int j = 0; j <= cap; ++j) columns_.push_back(action_(monomial(j)));
}

PolyOperator PolyOperator::from_columns(std::string name, int degree_shift,
                                        std::vector<XPoly> columns) {
  PolyOperator op;
  op.name_ = std::move(name);
  op.degree_shift_ = degree_shift;
  op.columns_ = std::move(columns);
  return op;
}

const XPoly& PolyOperator::column(int j) const {
  if (j < 0 || j > cap())
    throw DegreeCapExceeded(name_ + ": column " + std::to_string(j) + " beyond cap " +
                            std::to_string(cap()));
  return columns_[static_cast<std::size_t>(j)];
}

XPoly PolyOperator::apply(const XPoly& f) const {
  if (action_) return action_(f);
  return apply_matrix(f);
}

XPoly PolyOperator::apply_matrix(const XPoly& f) const {
  XPoly out;
  for (int j = 0; j <= f.degree(); ++j) {
    const Rational c = f.coeff(j);
    if (c != 0) out += column(j) * c;
  }
  return out;
}

// ----------------------------------------------------------- matrix algebra

PolyOperator compose(const PolyOperator& a, const PolyOperator& b) {
  std::vector<XPoly> cols;
  for (int j = 0; j <= b.cap(); ++j) {
    const XPoly& bj = b.column(j);
    if (bj.degree() > a.cap()) break;
    cols.push_back(a.apply_matrix(bj));
  }
  if (cols.empty())
    throw DegreeCapExceeded("compose(" + a.name() + ", " + b.name() + "): empty range");
  return PolyOperator::from_columns(a.name() + "*" + b.name(), a.degree_shift() + b.degree_shift(),
                                    std::move(cols));
}

PolyOperator difference(const PolyOperator& a, const PolyOperator& b) {
  const int cap = std::min(a.cap(), b.cap());
  std::vector<XPoly> cols;
  for (int j = 0; j <= cap; ++j) cols.push_back(a.column(j) - b.column(j));
  return PolyOperator::from_columns(a.name() + "-" + b.name(),
                                    std::max(a.degree_shift(), b.degree_shift()), std::move(cols));
}

PolyOperator scaled(const PolyOperator& a, const Rational& s) {
  std::vector<XPoly> cols;
  for (const XPoly& c : a.columns()) cols.push_back(c * s);
  return PolyOperator::from_columns(a.name(), a.degree_shift(), std::move(cols));
}

PolyOperator commutator(const PolyOperator& a, const PolyOperator& b) {
  PolyOperator out = difference(compose(a, b), compose(b, a));
  return PolyOperator::from_columns("[" + a.name() + "," + b.name() + "]", out.degree_shift(),
                                    out.columns());
}

PolyOperator identity_operator(int cap) {
  return PolyOperator("I", 0, [](const XPoly& f) { return f; }, cap);
}

PolyOperator multiplication_operator(const XPoly& m, int cap, std::string name) {
  return PolyOperator(std::move(name), std::max(m.degree(), 0),
                      [m](const XPoly& f) { return m * f; }, cap);
}

bool same_matrix(const PolyOperator& a, const PolyOperator& b, int max_deg) {
  for (int j = 0; j <= max_deg; ++j) {
    if (!(a.column(j) == b.column(j))) return false;
  }
  return true;
}

std::optional<Rational> identity_multiple(const PolyOperator& op, int max_deg) {
  const Rational c = op.column(0).coeff(0);
  for (int j = 0; j <= max_deg; ++j) {
    if (!(op.column(j) == XPoly::monomial(c, j))) return std::nullopt;
  }
  return c;
}

PolyOperator d_from_l(const PolyOperator& l) {
  std::vector<XPoly> cols{XPoly()};
  for (int n = 1; n <= l.cap() + 1; ++n) {
    XPoly sum;
    for (int k = 0; k <= n - 1; ++k) sum += monomial(k) * l.column(n - k - 1);
    cols.push_back(std::move(sum));
  }
  return PolyOperator::from_columns("D(" + l.name() + ")", std::max(l.degree_shift() - 1, 0),
                                    std::move(cols));
}

// ---------------------------------------------------- Laurent-level actions

LaurentPoly apply_v_form(const LaurentPoly& v, const Rational& step, const LaurentPoly& f) {
  const LaurentPoly num = v * dilate(f, step) - v.reflected() * dilate(f, kOne / step);
  return divide_exact(num, z_minus_inverse());
}

LaurentPoly apply_aw_L(const AwSymbol& sym, const LaurentPoly& f) {
  return apply_v_form(sym.quartic.shifted(-2), sym.step, f);
}

LaurentPoly apply_aw_D(const AwSymbol& sym, const LaurentPoly& f) {
  const Rational& q = sym.step;
  const LaurentPoly den(0, {kOne, Rational(0), -(kOne + q), Rational(0), q});  // (1 - z^2)(1 - q z^2)
  const LaurentPoly den_r = den.reflected();
  const LaurentPoly& phi = sym.quartic;
  const LaurentPoly num = phi * den_r * (dilate(f, q) - f) +
                          phi.reflected() * den * (dilate(f, kOne / q) - f);
  return divide_exact(num, den * den_r) * (kTwo / (kOne - kOne / q));
}

PolyOperator::Action lift_symmetric(std::function<LaurentPoly(const LaurentPoly&)> action) {
  return [action = std::move(action)](const XPoly& f) {
    return laurent_sym_to_x(action(x_to_laurent_sym(f)));
  };
}

// --------------------------------------------------------- family operators

PolyOperator op_X(int cap) { return multiplication_operator(XPoly::x(), cap, "X"); }

PolyOperator aw_L(const AwSymbol& sym, int cap) {
  return PolyOperator("L", 1, lift_symmetric([sym](const LaurentPoly& f) { return apply_aw_L(sym, f); }),
                      cap);
}

PolyOperator aw_D(const AwSymbol& sym, int cap) {
  return PolyOperator("D", 0, lift_symmetric([sym](const LaurentPoly& f) { return apply_aw_D(sym, f); }),
                      cap);
}

PolyOperator jacobi_L(const Rational& alpha, const Rational& beta, int cap) {
  const XPoly one_minus_x2({kOne, Rational(0), Rational(-1)});
  const XPoly lin = XPoly({alpha - beta, alpha + beta + 2}) * Rational(1, 2);
  return PolyOperator("L", 1,
                      [=](const XPoly& f) { return one_minus_x2 * f.derivative() - lin * f; }, cap);
}

PolyOperator jacobi_D(const Rational& alpha, const Rational& beta, int cap) {
  const XPoly half_one_minus_x2({Rational(1, 2), Rational(0), Rational(-1, 2)});
  const XPoly lin = XPoly({beta - alpha, -(alpha + beta + 2)}) * Rational(1, 2);
  return PolyOperator("D", 0,
                      [=](const XPoly& f) {
                        const XPoly d1 = f.derivative();
                        return half_one_minus_x2 * d1.derivative() + lin * d1;
                      },
                      cap);
}

namespace {

/// The v(z) of a continuous q-Jacobi display as the product of its linear
/// factors (1 - r z), times z^-2.
LaurentPoly v_from_roots(std::initializer_list<Rational> roots, const LaurentPoly& extra) {
  LaurentPoly v = extra;
  for (const Rational& r : roots) v = v * LaurentPoly(0, {kOne, -r});
  return v.shifted(-2);
}

}  // namespace

PolyOperator cqjacobi_L(const FamilySpec& spec, int cap) {
  const Rational& s = spec.param("s");
  const AwParams p = cqjacobi_aw_params(spec, CqJacobiEmbedding::Embed49);
  // q^{alpha/2+1/4} = p.a, q^{beta/2+1/4} = -p.b, q^{1/2} = s^2.
  const Rational half = s * s;
  const LaurentPoly v = v_from_roots({p.a, p.b}, LaurentPoly(0, {kOne, Rational(0), -half}));
  return PolyOperator("L", 1, lift_symmetric([v, half](const LaurentPoly& f) {
                        return apply_v_form(v, half, f);
                      }),
                      cap);
}

PolyOperator cqjacobi_Ltilde(const FamilySpec& spec, int cap) {
  const AwParams p = cqjacobi_aw_params(spec, CqJacobiEmbedding::Embed09);
  const LaurentPoly v = v_from_roots({p.a, p.b, p.c, p.d}, LaurentPoly::constant(kOne));
  const Rational q = p.q;
  return PolyOperator("L~", 1, lift_symmetric([v, q](const LaurentPoly& f) {
                        return apply_v_form(v, q, f);
                      }),
                      cap);
}

LaurentPoly apply_cqultra_L(const FamilySpec& spec, const LaurentPoly& f) {
  const Rational& t = spec.param("t");
  const Rational& s = spec.param("s");
  // v(z) = (1 - t z^2)(z^-2 - q^{1/2}); v(1/z) = (1 - t z^-2)(z^2 - q^{1/2}).
  const LaurentPoly v = LaurentPoly(0, {kOne, Rational(0), -t}) * LaurentPoly(-2, {kOne, 0, -s});
  return apply_v_form(v, s, f);
}

PolyOperator cqultra_L(const FamilySpec& spec, int cap) {
  return PolyOperator("L", 1, lift_symmetric([spec](const LaurentPoly& f) {
                        return apply_cqultra_L(spec, f);
                      }),
                      cap);
}

PolyOperator cqultra_nonskew_L(const FamilySpec& spec, int cap) {
  const Rational t = spec.param("t");
  const Rational s = spec.param("s");
  const LaurentPoly left(-1, {kOne, Rational(0), -t});    // z^-1 (1 - t z^2)
  const LaurentPoly right = left.reflected();            // z (1 - t z^-2)
  return PolyOperator("L'", 1, lift_symmetric([=](const LaurentPoly& f) {
                        return left * dilate(f, s) + right * dilate(f, kOne / s);
                      }),
                      cap);
}

PolyOperator bigq_L(const FamilySpec& spec, int cap) {
  const Rational& a = spec.param("a");
  const Rational& b = spec.param("b");
  const Rational& c = spec.param("c");
  const Rational& q = spec.param("q");
  const XPoly up = XPoly({kOne, Rational(-1)}) * XPoly({kOne, b / c});
  const XPoly down = XPoly({kOne, -kOne / (a * q)}) * XPoly({kOne, kOne / (c * q)});
  return PolyOperator("L", 1,
                      [=](const XPoly& f) {
                        return divide_exact(up * dilate(f, q) - down * dilate(f, kOne / q), XPoly::x());
                      },
                      cap);
}

FamilyOperators family_operators(const FamilySpec& spec) {
  const int cap = spec.degree_cap;
  switch (spec.id) {
    case FamilyId::Jacobi: {
      const Rational& al = spec.param("alpha");
      const Rational& be = spec.param("beta");
      return {op_X(cap), jacobi_L(al, be, cap), jacobi_D(al, be, cap)};
    }
    case FamilyId::BigQJacobi: {
      PolyOperator l = bigq_L(spec, cap);
      PolyOperator d = d_from_l(l);
      return {op_X(cap), std::move(l), std::move(d)};
    }
    default: {
      const AwSymbol sym = family_aw_symbol(spec);
      return {op_X(cap), aw_L(sym, cap), aw_D(sym, cap)};
    }
  }
}

}  // namespace awstruct
