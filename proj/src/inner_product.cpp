#include "awstruct/inner_product.hpp"

#include <span>

namespace awstruct {

namespace {

/// Gram-type table <op e_i, e_j> and <e_i, op e_j> from expansions.
struct Expansions {
  std::vector<std::vector<Rational>> basis;  // expansions of x^i
  std::vector<std::vector<Rational>> image;  // expansions of op x^i
};

Expansions expand_all(const PolyOperator& op, const FamilyData& data, int max_deg) {
  Expansions ex;
  for (int i = 0; i <= max_deg; ++i) {
    ex.basis.push_back(expand_in_family(XPoly::monomial(Rational(1), i), data));
    ex.image.push_back(expand_in_family(op.column(i), data));
  }
  return ex;
}

Rational dot(const std::vector<Rational>& f, const std::vector<Rational>& g,
             const std::vector<Rational>& h) {
  Rational sum = 0;
  const std::size_t m = std::min(f.size(), g.size());
  for (std::size_t n = 0; n < m; ++n) sum += f[n] * g[n] * h.at(n);
  return sum;
}

std::optional<SymmetryDefect> defect(const PolyOperator& op, const FamilyData& data, int max_deg,
                                     int sign) {
  const Expansions ex = expand_all(op, data, max_deg);
  for (int i = 0; i <= max_deg; ++i) {
    SymmetryDefect d{i, {}};
    bool nonzero = false;
    for (int j = 0; j <= max_deg; ++j) {
      const Rational v = dot(ex.image[static_cast<std::size_t>(i)], ex.basis[static_cast<std::size_t>(j)], data.h) +
                         sign * dot(ex.basis[static_cast<std::size_t>(i)], ex.image[static_cast<std::size_t>(j)], data.h);
      nonzero = nonzero || v != 0;
      d.row.push_back(v);
    }
    if (nonzero) return d;
  }
  return std::nullopt;
}

Rational max_abs(const PolyOperator& op, const FamilyData& data, int max_deg, int sign) {
  const Expansions ex = expand_all(op, data, max_deg);
  Rational worst = 0;
  for (int i = 0; i <= max_deg; ++i) {
    for (int j = 0; j <= max_deg; ++j) {
      const Rational v = abs(dot(ex.image[static_cast<std::size_t>(i)], ex.basis[static_cast<std::size_t>(j)], data.h) +
                             sign * dot(ex.basis[static_cast<std::size_t>(i)], ex.image[static_cast<std::size_t>(j)], data.h));
      if (v > worst) worst = v;
    }
  }
  return worst;
}

}  // namespace

std::vector<Rational> expand_in_family(const XPoly& f, const FamilyData& data) {
  return expand_in_basis(f, std::span<const XPoly>(data.p.data(), data.h.size()));
}

Rational inner(const XPoly& f, const XPoly& g, const FamilyData& data) {
  return dot(expand_in_family(f, data), expand_in_family(g, data), data.h);
}

std::optional<SymmetryDefect> symmetry_defect(const PolyOperator& op, const FamilyData& data,
                                              int max_deg) {
  return defect(op, data, max_deg, -1);
}

std::optional<SymmetryDefect> skew_symmetry_defect(const PolyOperator& op, const FamilyData& data,
                                                   int max_deg) {
  return defect(op, data, max_deg, +1);
}

Rational symmetry_residual(const PolyOperator& op, const FamilyData& data, int max_deg) {
  return max_abs(op, data, max_deg, -1);
}

Rational skew_symmetry_residual(const PolyOperator& op, const FamilyData& data, int max_deg) {
  return max_abs(op, data, max_deg, +1);
}

}  // namespace awstruct
