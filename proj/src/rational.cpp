#include "awstruct/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace awstruct {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("make_rational: zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::string digits(text);
  std::size_t start = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
  if (start == digits.size())
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i])))
      throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  if (digits[0] == '+') digits.erase(0, 1);
  return BigInt(digits);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  BigInt num = parse_integer(t.substr(0, slash), t);
  BigInt den = 1;
  if (slash != std::string_view::npos) den = parse_integer(t.substr(slash + 1), t);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(t) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("pow: zero base with negative exponent");
    return pow(Rational(1) / base, -exponent);
  }
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

long double to_long_double(const Rational& value) {
  // Scale to keep both parts representable before dividing.
  const long num_bits = static_cast<long>(mpz_sizeinbase(value.get_num_mpz_t(), 2));
  const long den_bits = static_cast<long>(mpz_sizeinbase(value.get_den_mpz_t(), 2));
  const long shift = std::max(0L, std::max(num_bits, den_bits) - 1000);
  BigInt num = value.get_num() >> shift;
  BigInt den = value.get_den() >> shift;
  if (den == 0) return 0.0L;
  return std::stold(num.get_str()) / std::stold(den.get_str());
}

bool rational_sqrt(const Rational& value, Rational* root) {
  if (value < 0) return false;
  if (!mpz_perfect_square_p(value.get_num_mpz_t()) ||
      !mpz_perfect_square_p(value.get_den_mpz_t()))
    return false;
  if (root != nullptr) {
    BigInt num;
    BigInt den;
    mpz_sqrt(num.get_mpz_t(), value.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), value.get_den_mpz_t());
    *root = Rational(num, den);
    root->canonicalize();
  }
  return true;
}

}  // namespace awstruct
