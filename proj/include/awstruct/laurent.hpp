#pragma once

/// \file
/// Exact Laurent-polynomial algebra.
///
/// Three value types share the rational coefficient field:
///   - LaurentPoly:    sum_{k=lo}^{hi} c_k z^k,
///   - SymLaurentPoly: c_0 + sum_{k>=1} c_k (z^k + z^-k),
///   - XPoly:          ordinary polynomial sum_k a_k x^k.
/// A symmetric Laurent polynomial f[z] and an XPoly f(x) describe the same
/// function when x = (z + 1/z)/2; sym_to_x / x_to_sym convert between them.
/// The zero polynomial always has an empty coefficient list.

#include <stdexcept>
#include <string>
#include <vector>

#include "awstruct/rational.hpp"

namespace awstruct {

/// Raised when an exact division leaves a remainder. Inside the identity
/// engine this always means an upstream identity or data error.
class NonzeroRemainder : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int low, std::vector<Rational> coeffs);

  static LaurentPoly constant(const Rational& c);
  static LaurentPoly monomial(const Rational& c, int exponent);
  /// z (the Laurent variable itself).
  static LaurentPoly z() { return monomial(Rational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest / highest exponent with a nonzero coefficient (0 for zero).
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int exponent) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// f(1/z).
  LaurentPoly reflected() const;
  /// z^k f(z).
  LaurentPoly shifted(int k) const;
  bool is_symmetric() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Rational& s);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string(const std::string& var = "z") const;

 private:
  void normalize();

  int low_ = 0;
  std::vector<Rational> coeffs_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(LaurentPoly a, const Rational& s);
LaurentPoly operator*(const Rational& s, LaurentPoly a);

/// f(r z): coefficient of z^k is multiplied by r^k. Throws on r = 0.
LaurentPoly dilate(const LaurentPoly& f, const Rational& r);

/// The h with f = g h. Throws std::domain_error for g = 0 and
/// NonzeroRemainder when g does not divide f.
LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& g);

class SymLaurentPoly {
 public:
  SymLaurentPoly() = default;
  explicit SymLaurentPoly(std::vector<Rational> coeffs);

  /// Throws std::invalid_argument if f is not symmetric.
  static SymLaurentPoly from_laurent(const LaurentPoly& f);
  LaurentPoly to_laurent() const;

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;

  friend bool operator==(const SymLaurentPoly& a, const SymLaurentPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

SymLaurentPoly operator+(const SymLaurentPoly& a, const SymLaurentPoly& b);
SymLaurentPoly operator-(const SymLaurentPoly& a, const SymLaurentPoly& b);
SymLaurentPoly operator*(const SymLaurentPoly& a, const SymLaurentPoly& b);
SymLaurentPoly operator*(const SymLaurentPoly& a, const Rational& s);

class XPoly {
 public:
  XPoly() = default;
  explicit XPoly(std::vector<Rational> coeffs);

  static XPoly constant(const Rational& c);
  static XPoly monomial(const Rational& c, int exponent);
  static XPoly x() { return monomial(Rational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int k) const;
  Rational leading() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational eval(const Rational& x) const;
  XPoly derivative() const;

  XPoly& operator+=(const XPoly& other);
  XPoly& operator-=(const XPoly& other);
  XPoly& operator*=(const Rational& s);

  friend bool operator==(const XPoly& a, const XPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

XPoly operator+(XPoly a, const XPoly& b);
XPoly operator-(XPoly a, const XPoly& b);
XPoly operator-(XPoly a);
XPoly operator*(const XPoly& a, const XPoly& b);
XPoly operator*(XPoly a, const Rational& s);
XPoly operator*(const Rational& s, XPoly a);

/// f(r x).
XPoly dilate(const XPoly& f, const Rational& r);
/// Exact polynomial division; throws NonzeroRemainder.
XPoly divide_exact(const XPoly& f, const XPoly& g);

LaurentPoly to_laurent(const XPoly& f);
/// Throws std::invalid_argument if f has negative powers.
XPoly to_xpoly(const LaurentPoly& f);

/// f[z] -> f(x), x = (z + 1/z)/2.
XPoly sym_to_x(const SymLaurentPoly& f);
/// f(x) -> f[z].
SymLaurentPoly x_to_sym(const XPoly& f);

/// Shorthands going through the symmetric representation.
LaurentPoly x_to_laurent_sym(const XPoly& f);
XPoly laurent_sym_to_x(const LaurentPoly& f);

}  // namespace awstruct
