#include "awstruct/qdifference.hpp"

#include <string>
#include <utility>

#include "awstruct/qcalculus.hpp"

namespace awstruct {

namespace {

const Rational kOne(1);

constexpr int kSolveTerms = 6;

std::optional<Rational> constant_quotient(const LaurentPoly& num, const LaurentPoly& den) {
  if (num.is_zero()) return Rational(0);
  LaurentPoly quotient;
  try {
    quotient = divide_exact(num, den);
  } catch (const NonzeroRemainder&) {
    return std::nullopt;
  }
  if (quotient.low() != 0 || quotient.high() != 0) return std::nullopt;
  return quotient.coeff(0);
}

XPoly as_xpoly(const LaurentPoly& f) { return to_xpoly(f); }

}  // namespace

std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows, int cols) {
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][static_cast<std::size_t>(col)] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const Rational inv = kOne / rows[rank][static_cast<std::size_t>(col)];
    for (auto& v : rows[rank]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      const Rational factor = rows[r][static_cast<std::size_t>(col)];
      if (factor == 0) continue;
      for (int k = col; k < cols; ++k)
        rows[r][static_cast<std::size_t>(k)] -= factor * rows[rank][static_cast<std::size_t>(k)];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(cols));
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      v[static_cast<std::size_t>(pivot_col[r])] = -rows[r][static_cast<std::size_t>(free)];
    basis.push_back(std::move(v));
  }
  return basis;
}

LaurentPoly family_laurent(const FamilyData& data, int n) {
  const XPoly& p = data.p.at(static_cast<std::size_t>(n));
  return family_variable(data.id()) == Variable::Z ? x_to_laurent_sym(p) : to_laurent(p);
}

Rational qdiff_step(const FamilySpec& spec) {
  switch (spec.id) {
    case FamilyId::BigQJacobi: return spec.param("q");
    case FamilyId::Jacobi: throw std::logic_error("Jacobi polynomials have no q-difference equation");
    default: return family_aw_symbol(spec).step;
  }
}

LaurentPoly apply_qdifference(const QDifferenceEquation& eq, const LaurentPoly& f) {
  return eq.a * (dilate(f, eq.step) - f) + eq.c * (dilate(f, kOne / eq.step) - f);
}

QDifferenceEquation derive_second_order_qdiff(const FamilyData& data, int min_degree,
                                              int max_degree) {
  const Variable var = family_variable(data.id());
  const Rational step = qdiff_step(data.spec);
  const int terms = std::min(kSolveTerms, static_cast<int>(data.p.size()) - 1);
  if (terms < 2) throw NoSolution("derive_second_order_qdiff: too few polynomials");

  std::vector<LaurentPoly> P, U, V;
  for (int n = 0; n <= terms; ++n) {
    P.push_back(family_laurent(data, n));
    U.push_back(dilate(P.back(), step) - P.back());
    V.push_back(dilate(P.back(), kOne / step) - P.back());
  }

  for (int d = min_degree; d <= max_degree; ++d) {
    const int lo = var == Variable::Z ? -d : 0;
    const int width = var == Variable::Z ? 2 * d + 1 : d + 1;
    // Unknowns: a, c, then g_1..g_terms (g_n = eigen_n * e).
    const int cols = width * (2 + terms);
    std::vector<std::vector<Rational>> rows;
    for (int n = 1; n <= terms; ++n) {
      const int lo_exp = std::min({U[n].low(), V[n].low(), P[n].low()}) + lo;
      const int hi_exp = std::max({U[n].high(), V[n].high(), P[n].high()}) + lo + width - 1;
      for (int k = lo_exp; k <= hi_exp; ++k) {
        std::vector<Rational> row(static_cast<std::size_t>(cols));
        bool any = false;
        for (int j = 0; j < width; ++j) {
          const int shift = lo + j;
          const Rational ua = U[n].coeff(k - shift);
          const Rational vc = V[n].coeff(k - shift);
          const Rational pg = P[n].coeff(k - shift);
          row[static_cast<std::size_t>(j)] = ua;
          row[static_cast<std::size_t>(width + j)] = vc;
          row[static_cast<std::size_t>(width * (1 + n) + j)] = -pg;
          any = any || ua != 0 || vc != 0 || pg != 0;
        }
        if (any) rows.push_back(std::move(row));
      }
    }
    auto basis = nullspace(std::move(rows), cols);
    if (basis.empty()) continue;
    if (basis.size() > 1)
      throw NoSolution("derive_second_order_qdiff: " + std::to_string(basis.size()) +
                       "-dimensional solution space at ansatz degree " + std::to_string(d));
    const auto& v = basis.front();
    auto slice = [&](int block) {
      std::vector<Rational> c(v.begin() + width * block, v.begin() + width * (block + 1));
      return LaurentPoly(lo, std::move(c));
    };
    QDifferenceEquation eq;
    eq.variable = var;
    eq.step = step;
    eq.a = slice(0);
    eq.c = slice(1);
    eq.e = slice(2);
    eq.ansatz_degree = d;
    if (eq.e.is_zero()) throw NoSolution("derive_second_order_qdiff: trivial weight e");

    for (int n = 0; n < static_cast<int>(data.p.size()); ++n) {
      const LaurentPoly pn = n <= terms ? P[static_cast<std::size_t>(n)] : family_laurent(data, n);
      const auto value = constant_quotient(apply_qdifference(eq, pn), eq.e * pn);
      if (!value)
        throw VerificationFailure("derived q-difference equation fails at n = " + std::to_string(n));
      eq.eigen.push_back(*value);
    }
    if (eq.eigen[0] != 0 || eq.eigen[1] != 1)
      throw VerificationFailure("derived q-difference equation has unexpected normalization");
    return eq;
  }
  throw NoSolution("derive_second_order_qdiff: no solution up to ansatz degree " +
                   std::to_string(max_degree));
}

// ------------------------------------------------------- big q-Jacobi chain

BigQStructureCoefficients bigq_structure_coefficients(int n, const FamilySpec& spec) {
  const Rational& a = spec.param("a");
  const Rational& b = spec.param("b");
  const Rational& c = spec.param("c");
  const Rational& q = spec.param("q");
  BigQStructureCoefficients out;
  out.up = (kOne - a * pow(q, n + 1)) * (kOne + c * pow(q, n + 1)) * (kOne - a * b * pow(q, n + 1)) /
           (pow(q, n + 2) * a * c * (kOne - a * b * pow(q, 2 * n + 1)));
  out.down = -(kOne - pow(q, n)) * (kOne - b * pow(q, n)) * (kOne + a * b / c * pow(q, n)) /
             (kOne - a * b * pow(q, 2 * n + 1));
  return out;
}

ReducedStructure reduce_bigq_structure(const FamilyData& data, const QDifferenceEquation& eq,
                                       int n) {
  const FamilySpec& spec = data.spec;
  if (spec.id != FamilyId::BigQJacobi) throw std::logic_error("reduce_bigq_structure: not big q-Jacobi");
  const Rational& a = spec.param("a");
  const Rational& b = spec.param("b");
  const Rational& c = spec.param("c");
  const Rational& q = spec.param("q");
  const XPoly x = XPoly::x();

  const XPoly u = XPoly({kOne, Rational(-1)}) * XPoly({kOne, b / c});
  const XPoly w = XPoly({kOne, -kOne / (a * q)}) * XPoly({kOne, kOne / (c * q)});
  const XPoly ad = as_xpoly(eq.a);
  const XPoly cd = as_xpoly(eq.c);
  const XPoly e = as_xpoly(eq.e);
  const Rational& lambda = eq.eigen.at(static_cast<std::size_t>(n));

  // x cd L P = N P - M D_q P.
  const XPoly M = x * (cd * u + w * ad) * (kOne - q);
  const XPoly N = cd * (u - w) - w * e * lambda;
  const XPoly T = XPoly({-kOne, kOne}) * XPoly({c, b});

  XPoly G, kappa, middle;
  try {
    G = divide_exact(M, T);
    kappa = divide_exact(cd * x, G);
    middle = divide_exact(N, G);
  } catch (const NonzeroRemainder&) {
    throw VerificationFailure("reduce_bigq_structure: elimination does not divide exactly");
  }
  if (kappa.degree() > 0) throw VerificationFailure("reduce_bigq_structure: outer factor depends on x");
  if (middle.degree() > 1) throw VerificationFailure("reduce_bigq_structure: middle term not affine");

  const BigQStructureCoefficients s = bigq_structure_coefficients(n, spec);
  const Rational k0 = kappa.coeff(0);
  ReducedStructure out;
  out.alpha = -k0 * s.up;
  out.gamma = n >= 1 ? -k0 * s.down : Rational(0);
  out.delta = middle.coeff(1);
  out.beta = middle.coeff(0);
  return out;
}

DqStructure bigq_dq_structure(const FamilyData& data, const ReducedStructure& r, int n) {
  const auto i = static_cast<std::size_t>(n);
  DqStructure out;
  out.a = r.alpha + r.delta * data.A.at(i);
  out.b = r.beta + r.delta * data.B.at(i);
  out.c = r.gamma + r.delta * data.C.at(i);
  return out;
}

}  // namespace awstruct
