#pragma once

/// \file
/// Linear operators on polynomials in x, carried both as an exact action and
/// as the column matrix in the monomial basis {1, x, x^2, ...}.
///
/// Operators of the Askey-Wilson-side families act on symmetric Laurent
/// polynomials; their PolyOperator wraps the Laurent action with the x <-> z
/// conversion, so every operator lives on the same graded space and operator
/// identities reduce to exact matrix comparisons.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "awstruct/families.hpp"
#include "awstruct/laurent.hpp"

namespace awstruct {

class DegreeCapExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class PolyOperator {
 public:
  using Action = std::function<XPoly(const XPoly&)>;

  /// Builds columns action(x^j) for j = 0..cap eagerly; the result is
  /// immutable and safe to share between threads.
  PolyOperator(std::string name, int degree_shift, Action action, int cap);

  /// An operator known only through its matrix.
  static PolyOperator from_columns(std::string name, int degree_shift, std::vector<XPoly> columns);

  const std::string& name() const { return name_; }
  /// Upper bound on deg(op f) - deg(f).
  int degree_shift() const { return degree_shift_; }
  /// Highest input degree with a stored column.
  int cap() const { return static_cast<int>(columns_.size()) - 1; }
  const std::vector<XPoly>& columns() const { return columns_; }
  const XPoly& column(int j) const;
  Rational entry(int row, int col) const { return column(col).coeff(row); }
  bool has_action() const { return static_cast<bool>(action_); }

  /// Exact action when available, else the matrix (throws DegreeCapExceeded).
  XPoly apply(const XPoly& f) const;
  /// Always through the stored matrix.
  XPoly apply_matrix(const XPoly& f) const;

 private:
  PolyOperator() = default;

  std::string name_;
  int degree_shift_ = 0;
  Action action_;
  std::vector<XPoly> columns_;
};

// --------------------------------------------------------- matrix algebra

/// a o b on input degrees where b's output stays within a's matrix.
PolyOperator compose(const PolyOperator& a, const PolyOperator& b);
PolyOperator difference(const PolyOperator& a, const PolyOperator& b);
PolyOperator scaled(const PolyOperator& a, const Rational& s);
/// [a, b] = ab - ba, computed from the matrices.
PolyOperator commutator(const PolyOperator& a, const PolyOperator& b);
PolyOperator identity_operator(int cap);
PolyOperator multiplication_operator(const XPoly& m, int cap, std::string name = "mult");

/// Column-by-column equality on input degrees 0..max_deg.
bool same_matrix(const PolyOperator& a, const PolyOperator& b, int max_deg);
/// c if op equals c * identity on degrees 0..max_deg.
std::optional<Rational> identity_multiple(const PolyOperator& op, int max_deg);

/// D(1) = 0, D(x^n) = sum_{k=0}^{n-1} x^k L(x^{n-k-1}); D has matrix cap L.cap() + 1.
PolyOperator d_from_l(const PolyOperator& l);

// ------------------------------------------------- Laurent-level actions

/// (v(z) f[step z] - v(1/z) f[z/step]) / (z - 1/z).
LaurentPoly apply_v_form(const LaurentPoly& v, const Rational& step, const LaurentPoly& f);

/// Askey-Wilson L: v(z) = quartic(z) z^-2.
LaurentPoly apply_aw_L(const AwSymbol& sym, const LaurentPoly& f);

/// Askey-Wilson D with 1/2 (1 - 1/q)(Df)[z] = v(z) f[qz] - (v(z) + v(1/z)) f[z] + v(1/z) f[z/q],
/// v(z) = quartic(z) / ((1 - z^2)(1 - q z^2)); denominators are cleared and
/// divided out exactly.
LaurentPoly apply_aw_D(const AwSymbol& sym, const LaurentPoly& f);

/// Lifts a symmetric Laurent action to x-polynomials.
PolyOperator::Action lift_symmetric(std::function<LaurentPoly(const LaurentPoly&)> action);

// ------------------------------------------------------ family operators

PolyOperator op_X(int cap);

PolyOperator aw_L(const AwSymbol& sym, int cap);
PolyOperator aw_D(const AwSymbol& sym, int cap);

/// (1 - x^2) f' - (alpha - beta + (alpha + beta + 2) x) f / 2.
PolyOperator jacobi_L(const Rational& alpha, const Rational& beta, int cap);
/// (1 - x^2) f'' / 2 + (beta - alpha - (alpha + beta + 2) x) f' / 2.
PolyOperator jacobi_D(const Rational& alpha, const Rational& beta, int cap);

/// Step q^{1/2} with v(z) = (1 - q^{a/2+1/4} z)(1 + q^{b/2+1/4} z)(1 - q^{1/2} z^2) z^-2.
PolyOperator cqjacobi_L(const FamilySpec& spec, int cap);
/// Step q with the quartic v~(z) = (1 - q^{a/2+1/4} z)(1 - q^{a/2+3/4} z)(1 + q^{b/2+1/4} z)(1 + q^{b/2+3/4} z) z^-2.
PolyOperator cqjacobi_Ltilde(const FamilySpec& spec, int cap);

/// ((1 - t z^2)(z^-2 - q^{1/2}) f[q^{1/2} z] - (1 - t z^-2)(z^2 - q^{1/2}) f[q^{-1/2} z]) / (z - 1/z).
PolyOperator cqultra_L(const FamilySpec& spec, int cap);
LaurentPoly apply_cqultra_L(const FamilySpec& spec, const LaurentPoly& f);
/// z^-1 (1 - t z^2) f[q^{1/2} z] + z (1 - t z^-2) f[q^{-1/2} z]; raises degree
/// by one but is not skew symmetric.
PolyOperator cqultra_nonskew_L(const FamilySpec& spec, int cap);

/// ((1 - x)(1 + b x / c) f(qx) - (1 - x/(aq))(1 + x/(cq)) f(x/q)) / x.
PolyOperator bigq_L(const FamilySpec& spec, int cap);

struct FamilyOperators {
  PolyOperator X;
  PolyOperator L;
  PolyOperator D;
};

/// X, L and D of a family. D is explicit for Askey-Wilson-side families and
/// Jacobi; for big q-Jacobi it is d_from_l(L). Continuous q-Jacobi with the
/// 09 embedding uses the q-step operator L~.
FamilyOperators family_operators(const FamilySpec& spec);

}  // namespace awstruct
