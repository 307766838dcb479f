#pragma once

/// \file
/// Inner products through orthogonal expansion: <f, g> = sum_n f_n g_n h_n
/// with h_0 = 1, exact on polynomials up to the family's degree cap.

#include <optional>
#include <vector>

#include "awstruct/families.hpp"
#include "awstruct/operators.hpp"

namespace awstruct {

std::vector<Rational> expand_in_family(const XPoly& f, const FamilyData& data);

Rational inner(const XPoly& f, const XPoly& g, const FamilyData& data);

/// First basis pair (i, j) where the tested relation fails, with the whole
/// defect row d_j = <op x^i, x^j> -/+ <x^i, op x^j>, j = 0..max_deg.
struct SymmetryDefect {
  int i = 0;
  std::vector<Rational> row;
};

/// Monomial basis pairs up to max_deg; nullopt when op is symmetric.
std::optional<SymmetryDefect> symmetry_defect(const PolyOperator& op, const FamilyData& data,
                                              int max_deg);
std::optional<SymmetryDefect> skew_symmetry_defect(const PolyOperator& op, const FamilyData& data,
                                                   int max_deg);

/// max |<op e_i, e_j> - <e_i, op e_j>| over basis pairs.
Rational symmetry_residual(const PolyOperator& op, const FamilyData& data, int max_deg);
/// max |<op e_i, e_j> + <e_i, op e_j>| over basis pairs.
Rational skew_symmetry_residual(const PolyOperator& op, const FamilyData& data, int max_deg);

}  // namespace awstruct
