#pragma once

#include <random>
#include <vector>

#include "awstruct/laurent.hpp"
#include "awstruct/rational.hpp"

namespace testing_support {

using awstruct::Rational;

inline Rational R(long p, long q = 1) { return awstruct::make_rational(p, q); }

inline Rational random_rational(std::mt19937_64& rng, long max_abs = 9) {
  std::uniform_int_distribution<long> num(-max_abs, max_abs);
  std::uniform_int_distribution<long> den(1, max_abs);
  return R(num(rng), den(rng));
}

inline std::vector<Rational> random_coeffs(std::mt19937_64& rng, int count) {
  std::vector<Rational> out;
  for (int i = 0; i < count; ++i) out.push_back(random_rational(rng));
  if (!out.empty() && out.back() == 0) out.back() = 1;
  return out;
}

}  // namespace testing_support
