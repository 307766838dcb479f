#pragma once

/// \file
/// Convergence harnesses for the two limit transitions: Askey-Wilson to big
/// q-Jacobi as epsilon -> 0 (exact rationals), and continuous q-Jacobi to
/// Jacobi as q -> 1 (extended-precision floating point).

#include <vector>

#include "awstruct/rational.hpp"
#include "awstruct/report.hpp"

namespace awstruct {

/// Askey-Wilson parameters (eps, aq/eps, -cq/eps, -eps b/c | q) at argument
/// z = x/eps, rescaled by eps^n / (aq, -cq, -eps^2 b/c; q)_n, against the big
/// q-Jacobi polynomials; and the rescaled Askey-Wilson structure coefficients
/// against the big q-Jacobi ones. Step k uses eps = eps0 / 2^k.
struct AwToBigQConfig {
  Rational a{1, 3};
  Rational b{1, 4};
  Rational c{1, 5};
  Rational q{1, 2};
  int n_max = 5;
  int eps_steps = 8;
  Rational eps0{1, 4};
};

std::vector<ConvergenceRow> limit_aw_to_bigq(const AwToBigQConfig& config);

/// Deviation of (2/(1-q)) L_q P_n[z; q] from 4 (L P_n)(cos theta) on the unit
/// circle, q = 1 - 2^-k for k in [k_min, k_max].
struct CqJacobiToJacobiConfig {
  Rational alpha{1};
  Rational beta{2};
  int n = 3;
  int k_min = 3;
  int k_max = 10;
  int theta_samples = 24;
};

std::vector<ConvergenceRow> limit_cqjacobi_to_jacobi(const CqJacobiToJacobiConfig& config);

/// True when every ratio present is at least `factor`, except rows whose
/// deviation is already below `floor`.
bool converges(const std::vector<ConvergenceRow>& rows, long double factor, long double floor = 0);

}  // namespace awstruct
