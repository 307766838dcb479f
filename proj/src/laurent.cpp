#include "awstruct/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace awstruct {

namespace {

template <typename Vec>
void trim_back(Vec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

void append_term(std::ostringstream& out, const Rational& c, const std::string& var, int e,
                 bool first) {
  if (!first) out << (c < 0 ? " - " : " + ");
  else if (c < 0) out << "-";
  const Rational a = abs(c);
  const bool unit = (a == 1);
  if (!unit || e == 0) out << a.get_str();
  if (e != 0) {
    if (!unit) out << "*";
    out << var;
    if (e != 1) out << "^" << e;
  }
}

}  // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(int low, std::vector<Rational> coeffs)
    : low_(low), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::constant(const Rational& c) { return LaurentPoly(0, {c}); }

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
  return LaurentPoly(exponent, {c});
}

void LaurentPoly::normalize() {
  trim_back(coeffs_);
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

Rational LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

LaurentPoly LaurentPoly::reflected() const {
  if (is_zero()) return {};
  std::vector<Rational> r(coeffs_.rbegin(), coeffs_.rend());
  return LaurentPoly(-high(), std::move(r));
}

LaurentPoly LaurentPoly::shifted(int k) const {
  if (is_zero()) return {};
  return LaurentPoly(low_ + k, coeffs_);
}

bool LaurentPoly::is_symmetric() const { return *this == reflected(); }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const int lo = std::min(low_, other.low_);
  const int hi = std::max(high(), other.high());
  std::vector<Rational> c(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    c[static_cast<std::size_t>(low_ - lo) + i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    c[static_cast<std::size_t>(other.low_ - lo) + i] += other.coeffs_[i];
  low_ = lo;
  coeffs_ = std::move(c);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly& LaurentPoly::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int e = high(); e >= low_; --e) {
    const Rational c = coeff(e);
    if (c == 0) continue;
    append_term(out, c, var, e, first);
    first = false;
  }
  return out.str();
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

LaurentPoly operator-(LaurentPoly a) { return a *= Rational(-1); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Rational> c(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) c[i + j] += x[i] * y[j];
  }
  return LaurentPoly(a.low() + b.low(), std::move(c));
}

LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }

LaurentPoly dilate(const LaurentPoly& f, const Rational& r) {
  if (r == 0) throw std::domain_error("dilate: zero dilation factor");
  if (f.is_zero()) return {};
  std::vector<Rational> c(f.coeffs());
  Rational power = pow(r, f.low());
  for (auto& ci : c) {
    ci *= power;
    power *= r;
  }
  return LaurentPoly(f.low(), std::move(c));
}

LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
  if (f.is_zero()) return {};
  // f = z^lf F(z), g = z^lg G(z) with F(0), G(0) != 0; divide F by G.
  std::vector<Rational> rem = f.coeffs();
  const auto& div = g.coeffs();
  const int nf = static_cast<int>(rem.size()) - 1;
  const int ng = static_cast<int>(div.size()) - 1;
  if (nf < ng) throw NonzeroRemainder("divide_exact: divisor degree exceeds dividend");
  std::vector<Rational> quot(static_cast<std::size_t>(nf - ng + 1));
  const Rational lead = div.back();
  for (int k = nf - ng; k >= 0; --k) {
    const Rational c = rem[static_cast<std::size_t>(k + ng)] / lead;
    quot[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= ng; ++j) rem[static_cast<std::size_t>(k + j)] -= c * div[static_cast<std::size_t>(j)];
  }
  for (const auto& r : rem) {
    if (r != 0)
      throw NonzeroRemainder("divide_exact: (" + f.to_string() + ") / (" + g.to_string() +
                             ") leaves a remainder");
  }
  return LaurentPoly(f.low() - g.low(), std::move(quot));
}

// ------------------------------------------------------------- SymLaurentPoly

SymLaurentPoly::SymLaurentPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

void SymLaurentPoly::normalize() { trim_back(coeffs_); }

Rational SymLaurentPoly::coeff(int k) const {
  if (k < 0) k = -k;
  if (k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

SymLaurentPoly SymLaurentPoly::from_laurent(const LaurentPoly& f) {
  if (!f.is_symmetric())
    throw std::invalid_argument("SymLaurentPoly: not symmetric: " + f.to_string());
  if (f.is_zero()) return {};
  std::vector<Rational> c(static_cast<std::size_t>(f.high() + 1));
  for (int k = 0; k <= f.high(); ++k) c[static_cast<std::size_t>(k)] = f.coeff(k);
  return SymLaurentPoly(std::move(c));
}

LaurentPoly SymLaurentPoly::to_laurent() const {
  if (is_zero()) return {};
  const int n = degree();
  std::vector<Rational> c(static_cast<std::size_t>(2 * n + 1));
  for (int k = -n; k <= n; ++k) c[static_cast<std::size_t>(k + n)] = coeff(k);
  return LaurentPoly(-n, std::move(c));
}

SymLaurentPoly operator+(const SymLaurentPoly& a, const SymLaurentPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return SymLaurentPoly(std::move(c));
}

SymLaurentPoly operator-(const SymLaurentPoly& a, const SymLaurentPoly& b) {
  return a + b * Rational(-1);
}

SymLaurentPoly operator*(const SymLaurentPoly& a, const SymLaurentPoly& b) {
  return SymLaurentPoly::from_laurent(a.to_laurent() * b.to_laurent());
}

SymLaurentPoly operator*(const SymLaurentPoly& a, const Rational& s) {
  std::vector<Rational> c(a.coeffs());
  for (auto& ci : c) ci *= s;
  return SymLaurentPoly(std::move(c));
}

// ---------------------------------------------------------------------- XPoly

XPoly::XPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void XPoly::normalize() { trim_back(coeffs_); }

XPoly XPoly::constant(const Rational& c) { return XPoly({c}); }

XPoly XPoly::monomial(const Rational& c, int exponent) {
  if (exponent < 0) throw std::invalid_argument("XPoly::monomial: negative exponent");
  std::vector<Rational> v(static_cast<std::size_t>(exponent + 1));
  v.back() = c;
  return XPoly(std::move(v));
}

Rational XPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational XPoly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational XPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

XPoly XPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return XPoly(std::move(d));
}

XPoly& XPoly::operator+=(const XPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

XPoly& XPoly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  normalize();
  return *this;
}

std::string XPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int e = degree(); e >= 0; --e) {
    const Rational c = coeff(e);
    if (c == 0) continue;
    append_term(out, c, var, e, first);
    first = false;
  }
  return out.str();
}

XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
XPoly operator-(XPoly a) { return a *= Rational(-1); }

XPoly operator*(const XPoly& a, const XPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Rational> c(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) c[i + j] += x[i] * y[j];
  }
  return XPoly(std::move(c));
}

XPoly operator*(XPoly a, const Rational& s) { return a *= s; }
XPoly operator*(const Rational& s, XPoly a) { return a *= s; }

XPoly dilate(const XPoly& f, const Rational& r) {
  std::vector<Rational> c(f.coeffs());
  Rational power = 1;
  for (auto& ci : c) {
    ci *= power;
    power *= r;
  }
  return XPoly(std::move(c));
}

XPoly divide_exact(const XPoly& f, const XPoly& g) {
  if (g.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
  if (f.is_zero()) return {};
  std::vector<Rational> rem = f.coeffs();
  const auto& div = g.coeffs();
  const int nf = f.degree();
  const int ng = g.degree();
  if (nf < ng) throw NonzeroRemainder("divide_exact: divisor degree exceeds dividend");
  std::vector<Rational> quot(static_cast<std::size_t>(nf - ng + 1));
  for (int k = nf - ng; k >= 0; --k) {
    const Rational c = rem[static_cast<std::size_t>(k + ng)] / div.back();
    quot[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= ng; ++j) rem[static_cast<std::size_t>(k + j)] -= c * div[static_cast<std::size_t>(j)];
  }
  for (const auto& r : rem) {
    if (r != 0)
      throw NonzeroRemainder("divide_exact: (" + f.to_string() + ") / (" + g.to_string() +
                             ") leaves a remainder");
  }
  return XPoly(std::move(quot));
}

LaurentPoly to_laurent(const XPoly& f) { return LaurentPoly(0, f.coeffs()); }

XPoly to_xpoly(const LaurentPoly& f) {
  if (f.is_zero()) return {};
  if (f.low() < 0) throw std::invalid_argument("to_xpoly: negative powers in " + f.to_string());
  std::vector<Rational> c(static_cast<std::size_t>(f.high() + 1));
  for (int k = f.low(); k <= f.high(); ++k) c[static_cast<std::size_t>(k)] = f.coeff(k);
  return XPoly(std::move(c));
}

XPoly sym_to_x(const SymLaurentPoly& f) {
  // z^k + z^-k = 2 T_k(x) with Chebyshev T_{k+1} = 2x T_k - T_{k-1}.
  if (f.is_zero()) return {};
  XPoly result = XPoly::constant(f.coeff(0));
  XPoly t_prev = XPoly::constant(Rational(1));
  XPoly t_cur = XPoly::x();
  const XPoly two_x = XPoly::monomial(Rational(2), 1);
  for (int k = 1; k <= f.degree(); ++k) {
    result += t_cur * (Rational(2) * f.coeff(k));
    XPoly t_next = two_x * t_cur - t_prev;
    t_prev = std::move(t_cur);
    t_cur = std::move(t_next);
  }
  return result;
}

SymLaurentPoly x_to_sym(const XPoly& f) {
  if (f.is_zero()) return {};
  const LaurentPoly half_sum(-1, {Rational(1, 2), Rational(0), Rational(1, 2)});
  LaurentPoly acc = LaurentPoly::constant(f.leading());
  for (int k = f.degree() - 1; k >= 0; --k) acc = acc * half_sum + LaurentPoly::constant(f.coeff(k));
  return SymLaurentPoly::from_laurent(acc);
}

LaurentPoly x_to_laurent_sym(const XPoly& f) { return x_to_sym(f).to_laurent(); }

XPoly laurent_sym_to_x(const LaurentPoly& f) { return sym_to_x(SymLaurentPoly::from_laurent(f)); }

}  // namespace awstruct
