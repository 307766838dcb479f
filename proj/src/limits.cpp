#include "awstruct/limits.hpp"

#include <cmath>
#include <complex>

#include "awstruct/families.hpp"
#include "awstruct/operators.hpp"
#include "awstruct/qcalculus.hpp"
#include "awstruct/qdifference.hpp"

namespace awstruct {

namespace {

const Rational kOne(1);

using Complex = std::complex<long double>;

/// Askey-Wilson structure coefficients: L p_n = up p_{n+1} + down p_{n-1}.
std::pair<Rational, Rational> aw_structure(int n, const AwParams& p) {
  const Rational abcd = p.abcd();
  const Rational& q = p.q;
  const Rational den = kOne - abcd * pow(q, 2 * n - 1);
  Rational six = 1;
  for (const Rational& pair : std::array<Rational, 6>{p.a * p.b, p.a * p.c, p.a * p.d, p.b * p.c, p.b * p.d, p.c * p.d})
    six *= kOne - pair * pow(q, n - 1);
  return {-(kOne - abcd * pow(q, n - 1)) / (pow(q, n) * den),
          six * (kOne - pow(q, n)) / (pow(q, n - 1) * den)};
}

Rational abs_max(const Rational& current, const Rational& candidate) {
  const Rational v = abs(candidate);
  return v > current ? v : current;
}

Complex q_poch(Complex a, long double q, int n) {
  Complex out = 1;
  for (int j = 0; j < n; ++j) out *= Complex(1) - a * std::pow(q, static_cast<long double>(j));
  return out;
}

/// Askey-Wilson polynomial from its terminating 4phi3 at complex z.
Complex aw_eval(int n, const std::array<long double, 4>& p, long double q, Complex z) {
  const long double a = p[0];
  const long double ab = p[0] * p[1], ac = p[0] * p[2], ad = p[0] * p[3];
  const long double abcd = ab * p[2] * p[3];
  Complex sum = 0;
  Complex term = 1;
  for (int k = 0; k <= n; ++k) {
    sum += term;
    const long double qk = std::pow(q, static_cast<long double>(k));
    term *= (1.0L - std::pow(q, static_cast<long double>(-n)) * qk) * (1.0L - abcd * std::pow(q, static_cast<long double>(n - 1)) * qk) *
            (Complex(1) - a * z * qk) * (Complex(1) - a / z * qk) * q /
            ((1.0L - ab * qk) * (1.0L - ac * qk) * (1.0L - ad * qk) * (1.0L - q * qk));
  }
  return sum * q_poch(ab, q, n) * q_poch(ac, q, n) * q_poch(ad, q, n) *
         std::pow(a, static_cast<long double>(-n));
}

}  // namespace

std::vector<ConvergenceRow> limit_aw_to_bigq(const AwToBigQConfig& config) {
  const Rational& a = config.a;
  const Rational& b = config.b;
  const Rational& c = config.c;
  const Rational& q = config.q;
  FamilySpec big;
  big.id = FamilyId::BigQJacobi;
  big.params = {{"a", a}, {"b", b}, {"c", c}, {"q", q}};

  std::vector<LaurentPoly> target;
  for (int n = 0; n <= config.n_max; ++n) target.push_back(to_laurent(bigq_polynomial(n, a, b, c, q)));

  std::vector<ConvergenceRow> rows;
  Rational eps = config.eps0;
  for (int step = 0; step < config.eps_steps; ++step, eps /= 2) {
    const AwParams p{eps, a * q / eps, -c * q / eps, -eps * b / c, q};
    std::vector<Rational> norm;
    for (int n = 0; n <= config.n_max + 1; ++n)
      norm.push_back(pow(eps, n) / (q_pochhammer(a * q, q, n) * q_pochhammer(-c * q, q, n) *
                                    q_pochhammer(-eps * eps * b / c, q, n)));

    Rational deviation = 0;
    for (int n = 0; n <= config.n_max; ++n) {
      const LaurentPoly in_z = x_to_laurent_sym(aw_polynomial(n, p));
      std::vector<Rational> coeffs;
      for (int k = in_z.low(); k <= in_z.high(); ++k) coeffs.push_back(in_z.coeff(k) * pow(eps, -k));
      const LaurentPoly rescaled = LaurentPoly(in_z.low(), std::move(coeffs)) * norm[static_cast<std::size_t>(n)];
      const LaurentPoly diff = rescaled - target[static_cast<std::size_t>(n)];
      for (int k = diff.low(); k <= diff.high(); ++k) deviation = abs_max(deviation, diff.coeff(k));
    }
    // L_aw ~ -(acq^2 / eps) L_big under the substitution.
    const Rational scale = -eps / (a * c * q * q);
    for (int n = 1; n <= config.n_max; ++n) {
      const auto [up, down] = aw_structure(n, p);
      const BigQStructureCoefficients expected = bigq_structure_coefficients(n, big);
      const auto i = static_cast<std::size_t>(n);
      deviation = abs_max(deviation, scale * up * norm[i] / norm[i + 1] - expected.up);
      deviation = abs_max(deviation, scale * down * norm[i] / norm[i - 1] - expected.down);
    }

    ConvergenceRow row;
    row.step = step;
    row.parameter_value = to_fraction_string(eps);
    row.max_deviation = to_long_double(deviation);
    if (!rows.empty() && row.max_deviation > 0) row.ratio = rows.back().max_deviation / row.max_deviation;
    rows.push_back(row);
  }
  return rows;
}

std::vector<ConvergenceRow> limit_cqjacobi_to_jacobi(const CqJacobiToJacobiConfig& config) {
  const int n = config.n;
  const long double al = to_long_double(config.alpha);
  const long double be = to_long_double(config.beta);
  const XPoly jacobi = jacobi_polynomials(config.alpha, config.beta, n).at(static_cast<std::size_t>(n));
  const XPoly l_jacobi = jacobi_L(config.alpha, config.beta, n + 1).apply(jacobi);
  const long double pi = std::acos(-1.0L);

  std::vector<ConvergenceRow> rows;
  for (int k = config.k_min; k <= config.k_max; ++k) {
    const Rational q_exact = kOne - pow(Rational(2), -k);
    const long double q = to_long_double(q_exact);
    const long double s = std::sqrt(q);  // q^{1/2}, the Askey-Wilson base
    const long double A = std::pow(q, al / 2 + 0.25L);
    const long double B = std::pow(q, be / 2 + 0.25L);
    const long double r = std::pow(q, 0.25L);
    const std::array<long double, 4> params{A, -B, r, -r};
    const Complex norm = std::pow(A, static_cast<long double>(n)) /
                         (q_poch(-std::pow(q, (al + be + 1) / 2), s, n) * q_poch(q, q, n));
    auto P = [&](Complex z) { return aw_eval(n, params, s, z) * norm; };
    auto v = [&](Complex z) { return (Complex(1) - A * z) * (Complex(1) + B * z) * (Complex(1) - s * z * z) / (z * z); };

    // Chebyshev coefficients of the difference; exact for degree < theta_samples.
    const int m_count = config.theta_samples;
    std::vector<long double> cheb(static_cast<std::size_t>(m_count), 0);
    for (int j = 0; j < m_count; ++j) {
      const long double theta = pi * (j + 0.5L) / m_count;
      const Complex z = std::polar(1.0L, theta);
      const Complex lq = (v(z) * P(s * z) - v(Complex(1) / z) * P(z / s)) / (z - Complex(1) / z);
      const long double x = std::cos(theta);
      long double lj = 0;
      for (int d = l_jacobi.degree(); d >= 0; --d) lj = lj * x + to_long_double(l_jacobi.coeff(d));
      const long double diff = (lq * (2 / (1 - q))).real() - 4 * lj;
      for (int m = 0; m < m_count; ++m)
        cheb[static_cast<std::size_t>(m)] += diff * std::cos(m * theta) * (m == 0 ? 1 : 2) / m_count;
    }
    long double worst = 0;
    for (long double c : cheb) worst = std::max(worst, std::abs(c));

    ConvergenceRow row;
    row.step = k;
    row.parameter_value = to_fraction_string(q_exact);
    row.max_deviation = worst;
    if (!rows.empty() && worst > 0) row.ratio = rows.back().max_deviation / worst;
    rows.push_back(row);
  }
  return rows;
}

bool converges(const std::vector<ConvergenceRow>& rows, long double factor, long double floor) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i - 1].max_deviation <= floor || rows[i].max_deviation <= floor) continue;
    if (!rows[i].ratio || *rows[i].ratio < factor) return false;
  }
  return true;
}

}  // namespace awstruct
