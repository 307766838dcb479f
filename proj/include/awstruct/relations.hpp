#pragma once

/// \file
/// The verification engine. Every checker evaluates one identity at one
/// parameter point (and one degree n, for degree-indexed identities) and
/// returns the exact residual; an asserted identity passes iff the residual
/// is the zero polynomial.
///
/// Checkers accept a perturbation index. Index k >= 0 adds 1 to the k-th
/// coefficient the identity takes from closed forms or family data, which
/// must break the identity; these are the negative controls.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "awstruct/families.hpp"
#include "awstruct/operators.hpp"
#include "awstruct/qdifference.hpp"

namespace awstruct {

enum class Status { Pass, Fail, Info };
std::string_view status_name(Status s);

/// A nonzero residual: polynomial coefficients in increasing degree (for
/// Laurent residuals, from the lowest exponent), or a list of scalar defects.
struct Residual {
  int degree = 0;
  std::vector<Rational> coeffs;
};

Residual residual_of(const XPoly& f);
Residual residual_of(const LaurentPoly& f);

struct VerificationReport {
  std::string identity_id;
  FamilyId family = FamilyId::AskeyWilson;
  ParamMap params;
  /// Degree index for degree-indexed identities.
  std::optional<int> n;
  Status status = Status::Pass;
  std::optional<Residual> residual;
};

/// Immutable per-sample data shared by all checkers.
struct FamilyContext {
  FamilyData data;
  FamilyOperators ops;
  /// Derived second-order q-difference equation (Askey-Wilson, big q-Jacobi).
  std::optional<QDifferenceEquation> qdiff;
};

/// Builds data and operators; derives the q-difference equation when asked
/// and the family has one.
FamilyContext make_context(const FamilySpec& spec, bool with_qdiff);

enum class Scope { PerDegree, PerSample };

/// What the checker expects of its residual.
enum class Expect { Zero, Nonzero, Informational };

struct IdentityInfo {
  std::string_view id;
  std::vector<FamilyId> families;
  Scope scope = Scope::PerDegree;
  int n_min = 1;
  Expect expect = Expect::Zero;
  /// Number of perturbable coefficients (at least one per identity).
  int slots = 1;
  bool needs_qdiff = false;

  bool applies_to(FamilyId id) const;
};

/// All identities in canonical order.
const std::vector<IdentityInfo>& identity_registry();
const IdentityInfo* find_identity(std::string_view id);

/// Highest degree index usable with the family's degree cap.
int max_degree_index(const FamilyContext& ctx);

/// Runs one identity on one sample: one report per n in [n_min, n_max] for
/// degree-indexed identities, one or more reports otherwise. Identities not
/// applicable to the family (or not available at this sample) yield none.
std::vector<VerificationReport> run_identity(const IdentityInfo& info, const FamilyContext& ctx,
                                             int n_max, int perturb = -1);

// ------------------------------------------------------ individual checks
//
// Each returns nullopt for a zero residual.

std::optional<Residual> check_structure(const FamilyContext& ctx, int n, int perturb = -1);
/// Eq-specific explicit structure relation (id selects the form).
std::optional<Residual> check_structure_explicit(std::string_view id, const FamilyContext& ctx,
                                                 int n, int perturb = -1);
std::optional<Residual> check_lowering(const FamilyContext& ctx, int n, int perturb = -1);
std::optional<Residual> check_raising(const FamilyContext& ctx, int n, int perturb = -1);
std::optional<Residual> check_aw_lowering(const FamilyContext& ctx, int n, int perturb = -1);
std::optional<Residual> check_aw_raising(const FamilyContext& ctx, int n, int perturb = -1);
std::optional<Residual> check_bangerezako_variant(const FamilyContext& ctx, int n, int perturb = -1);
std::optional<Residual> check_classic_jacobi_structure(const FamilyContext& ctx, int n,
                                                       int perturb = -1);
std::optional<Residual> check_bispectral(const FamilyContext& ctx, int n, int perturb = -1);
/// Scaled by q^{1/2}: (q D X - X D) p_n against (q J Lambda - Lambda J) p(., x).
Residual residual_q_bispectral(const FamilyContext& ctx, int n, int perturb = -1);
std::optional<Residual> check_eigen(const FamilyContext& ctx, int n, int perturb = -1);
std::optional<Residual> check_sklyanin(const AwParams& p, const Rational& e, int max_deg,
                                       int perturb = -1);

/// Sub-identities of the continuous q-ultraspherical web.
enum class CquIdentity {
  Eq51,
  Eq52,
  Eq53,
  Eq55,
  Recurrence,
  QDifference,
  Combination,
  CorrectedCombination,
};
std::optional<Residual> check_cqultra_web(CquIdentity which, const FamilyContext& ctx, int n,
                                          int perturb = -1);

std::optional<Residual> check_reduction_eq42(const FamilyContext& ctx, int n, int perturb = -1);
std::optional<Residual> check_reduction_eq41(const FamilyContext& ctx, int n, int perturb = -1);

}  // namespace awstruct
