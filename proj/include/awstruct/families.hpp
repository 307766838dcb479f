#pragma once

/// \file
/// The orthogonal-polynomial families: parameter specs, polynomial
/// constructions (hypergeometric and recurrence routes), closed-form
/// coefficient data, and the assembled FamilyData used by every checker.
///
/// Families living on the Askey-Wilson side (Askey-Wilson, continuous
/// q-Jacobi, continuous q-ultraspherical) are symmetric Laurent polynomials
/// in z; they are stored as XPoly in x = (z + 1/z)/2. Jacobi and big
/// q-Jacobi polynomials are ordinary polynomials in x.

#include <array>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "awstruct/laurent.hpp"
#include "awstruct/rational.hpp"

namespace awstruct {

inline constexpr int kDefaultDegreeCap = 16;

enum class FamilyId {
  AskeyWilson,
  Jacobi,
  CqJacobiEmbed49,
  CqJacobiEmbed09,
  CqUltraspherical,
  BigQJacobi,
};

inline constexpr std::array<FamilyId, 6> kAllFamilies = {
    FamilyId::AskeyWilson,     FamilyId::Jacobi,           FamilyId::CqJacobiEmbed49,
    FamilyId::CqJacobiEmbed09, FamilyId::CqUltraspherical, FamilyId::BigQJacobi,
};

std::string_view family_name(FamilyId id);
std::optional<FamilyId> family_from_name(std::string_view name);

/// Z: the family's functions are symmetric Laurent polynomials f[z].
enum class Variable { X, Z };
Variable family_variable(FamilyId id);

/// Parameter names expected for each family, in canonical order.
///   AskeyWilson       a b c d q
///   Jacobi            alpha beta
///   CqJacobi*         alpha beta s      (q = s^4, 2 alpha and 2 beta integral)
///   CqUltraspherical  t s               (q = s^2, so s = q^{1/2})
///   BigQJacobi        a b c q           (P_n(x; a, b, -c; q), lower parameter -cq)
std::vector<std::string> family_parameter_names(FamilyId id);

class InadmissibleParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using ParamMap = std::map<std::string, Rational>;

struct FamilySpec {
  FamilyId id = FamilyId::AskeyWilson;
  ParamMap params;
  int degree_cap = kDefaultDegreeCap;

  const Rational& param(const std::string& name) const;
  /// The family's q (s^4 for continuous q-Jacobi, s^2 for q-ultraspherical).
  /// Throws std::logic_error for Jacobi.
  Rational q() const;
};

/// Askey-Wilson parameters (a, b, c, d | q).
struct AwParams {
  Rational a, b, c, d, q;
  Rational abcd() const { return a * b * c * d; }
};

/// Symbol of an Askey-Wilson-type divided difference operator: the quartic
/// (1 - a z)(1 - b z)(1 - c z)(1 - d z) and the dilation step. Continuous
/// q-ultraspherical operators only need the quartic, which stays rational
/// even when t^{1/2} is not.
struct AwSymbol {
  LaurentPoly quartic;
  Rational step;
  /// Coefficient of z^4, i.e. abcd.
  Rational top() const { return quartic.coeff(4); }
};

AwSymbol aw_symbol(const AwParams& p);
/// Symbol for the three Askey-Wilson-side families (throws otherwise).
AwSymbol family_aw_symbol(const FamilySpec& spec);

enum class CqJacobiEmbedding { Embed49, Embed09 };

/// Induced Askey-Wilson parameters of a continuous q-Jacobi spec.
AwParams cqjacobi_aw_params(const FamilySpec& spec, CqJacobiEmbedding embedding);

// ---------------------------------------------------------------- Askey-Wilson

/// Terminating 4phi3 construction; p_n as a polynomial in x.
XPoly aw_polynomial(int n, const AwParams& p);

struct AwClosedForms {
  Rational k, A, B, C, h, lambda, gamma;
};
/// Closed forms: k_n, B_n, h_n/h_0, lambda_n, gamma_n and A_n = k_n/k_{n+1},
/// C_n = A_{n-1} h_n / h_{n-1} (C_0 := 0).
AwClosedForms aw_coefficients(int n, const AwParams& p);

/// p_0..p_{n_max} generated by the three-term recurrence with the closed-form
/// A_n, B_n, C_n above.
std::vector<XPoly> aw_polynomials_by_recurrence(const AwParams& p, int n_max);

// ---------------------------------------------------------------------- Jacobi

struct JacobiClosedForms {
  Rational A, B, C, lambda, gamma;
};
/// At n = 0 the removable singularities of A_0, B_0 (alpha + beta in {0, -1})
/// are resolved: A_0 = 2/(alpha+beta+2), B_0 = (beta-alpha)/(alpha+beta+2).
JacobiClosedForms jacobi_coefficients(int n, const Rational& alpha, const Rational& beta);

/// P_0..P_{n_max} from the recurrence seeded with P_0 = 1.
std::vector<XPoly> jacobi_polynomials(const Rational& alpha, const Rational& beta, int n_max);

// ------------------------------------------------------- continuous q-Jacobi

XPoly cqjacobi_polynomial(int n, const FamilySpec& spec, CqJacobiEmbedding embedding);

struct CqJacobiClosedForms {
  Rational A, C, gamma, gamma_tilde;
};
CqJacobiClosedForms cqjacobi_coefficients(int n, const FamilySpec& spec);

// ------------------------------------------------- continuous q-ultraspherical

/// C_0..C_{n_max} from (z + 1/z) C_n = A' C_{n+1} + C' C_{n-1}.
std::vector<XPoly> cqultra_polynomials(const FamilySpec& spec, int n_max);

/// The Askey-Wilson specialization at (t^{1/2}, -t^{1/2}, q^{1/4}, -q^{1/4} | q^{1/2});
/// available only when t and s = q^{1/2} are squares of rationals.
std::optional<XPoly> cqultra_polynomial_from_aw(int n, const FamilySpec& spec);

struct CqUltraClosedForms {
  Rational A, B, C;
};
/// Recurrence coefficients in x-normalization (half the (z + 1/z) ones).
CqUltraClosedForms cqultra_coefficients(int n, const FamilySpec& spec);

// ------------------------------------------------------------- big q-Jacobi

/// Terminating 3phi2(q^{-n}, ab q^{n+1}, x; aq, -cq; q, q).
XPoly bigq_polynomial(int n, const Rational& a, const Rational& b, const Rational& c,
                      const Rational& q);

// ---------------------------------------------------------- generic machinery

/// Coefficients c_0..c_m with f = sum c_n basis_n, by leading-term
/// elimination. basis_n must have exact degree n. Throws std::runtime_error
/// if f has degree beyond the basis.
std::vector<Rational> expand_in_basis(const XPoly& f, std::span<const XPoly> basis);

struct RecurrenceCoefficients {
  Rational A, B, C;
};

struct FamilyData {
  FamilySpec spec;
  /// p_0..p_{cap+1}.
  std::vector<XPoly> p;
  /// Indexed 0..cap. A, B, C and h come from the polynomials themselves
  /// (expansion of x p_n and the norm recursion with h_0 = 1); lambda and
  /// gamma are the family's eigenvalue data.
  std::vector<Rational> k, A, B, C, h, lambda, gamma;

  int cap() const { return spec.degree_cap; }
  FamilyId id() const { return spec.id; }
};

/// The unique A_n, B_n, C_n with x p_n = A_n p_{n+1} + B_n p_n + C_n p_{n-1}.
/// Throws std::runtime_error if x p_n has components outside p_{n-1..n+1}.
RecurrenceCoefficients recurrence_from_expansion(std::span<const XPoly> p, int n);

/// h_n = h_{n-1} C_n / A_{n-1}, h_0 = 1.
std::vector<Rational> norms_from_recurrence(std::span<const Rational> A,
                                            std::span<const Rational> C);

/// Validates every denominator the constructions touch up to degree_cap + 1.
/// Throws InadmissibleParameters.
void check_admissible(const FamilySpec& spec);

/// Throws InadmissibleParameters (including degenerate gamma_n, C_n, h_n).
FamilyData build_family(const FamilySpec& spec);

}  // namespace awstruct
