#pragma once

/// \file
/// Recovering a second-order q-difference equation from the polynomials
/// alone, and the big q-Jacobi reduction of the L-structure relation to a
/// D_q-structure relation.

#include <optional>
#include <stdexcept>
#include <vector>

#include "awstruct/families.hpp"
#include "awstruct/laurent.hpp"

namespace awstruct {

class NoSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// a(y) (f(s y) - f(y)) + c(y) (f(y/s) - f(y)) = eigen[n] e(y) f(y) with y the
/// family variable (x, or z for Askey-Wilson-side families) and s = step.
/// Normalized so eigen[0] = 0 and eigen[1] = 1.
struct QDifferenceEquation {
  Variable variable = Variable::X;
  Rational step;
  LaurentPoly a, c, e;
  /// eigen[n] for n = 0..cap.
  std::vector<Rational> eigen;
  /// Half-width (Z) or degree (X) of the coefficient ansatz that succeeded.
  int ansatz_degree = 0;
};

/// Family polynomial n as a Laurent polynomial in the family variable.
LaurentPoly family_laurent(const FamilyData& data, int n);

/// Left-hand side of the equation applied to f.
LaurentPoly apply_qdifference(const QDifferenceEquation& eq, const LaurentPoly& f);

/// Solves for the coefficient polynomials from n = 1..6 with supports
/// escalating from min_degree to max_degree, then verifies every n <= cap.
/// Throws NoSolution or VerificationFailure.
QDifferenceEquation derive_second_order_qdiff(const FamilyData& data, int min_degree = 2,
                                              int max_degree = 4);

/// Step used for the family: q for big q-Jacobi, the operator step otherwise.
Rational qdiff_step(const FamilySpec& spec);

/// Exact nullspace basis of a dense rational matrix (rows x cols).
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows, int cols);

// ------------------------------------------------------- big q-Jacobi chain

/// The two coefficients of the big q-Jacobi structure relation
/// L P_n = up * P_{n+1} + down * P_{n-1} in closed form.
struct BigQStructureCoefficients {
  Rational up, down;
};
BigQStructureCoefficients bigq_structure_coefficients(int n, const FamilySpec& spec);

/// (x - 1)(b x + c) D_q P_n = alpha P_{n+1} + (delta x + beta) P_n + gamma P_{n-1}.
struct ReducedStructure {
  Rational alpha, beta, gamma, delta;
};

/// (x - 1)(b x + c) D_q P_n = a P_{n+1} + b P_n + c P_{n-1}.
struct DqStructure {
  Rational a, b, c;
};

/// Eliminates P_n(x/q) from the L-structure relation with the derived
/// q-difference equation. Throws VerificationFailure if the eliminated middle
/// term is not affine in x or the outer coefficients are not constant.
ReducedStructure reduce_bigq_structure(const FamilyData& data, const QDifferenceEquation& eq,
                                       int n);

/// Eliminates x P_n with the three-term recurrence.
DqStructure bigq_dq_structure(const FamilyData& data, const ReducedStructure& r, int n);

}  // namespace awstruct
