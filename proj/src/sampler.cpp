#include "awstruct/sampler.hpp"

#include <random>

namespace awstruct {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Portable draws; std::uniform_int_distribution is implementation-defined.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
  }

  /// Nonzero rational in (-1, 1) with denominator in [2, max_den].
  Rational signed_unit(long max_den) {
    const long den = integer(2, max_den);
    long num = 0;
    while (num == 0) num = integer(-(den - 1), den - 1);
    return make_rational(num, den);
  }

  /// Rational in (0, 1) with denominator in [2, max_den].
  Rational unit(long max_den) {
    const long den = integer(2, max_den);
    return make_rational(integer(1, den - 1), den);
  }

  /// Multiple of 1/denominator in [lo, hi].
  Rational grid(long lo_num, long hi_num, long den) {
    return make_rational(integer(lo_num, hi_num), den);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

FamilySpec ParameterSampler::sample(FamilyId id, int index) const {
  std::uint64_t state = splitmix64(seed_ ^ splitmix64(static_cast<std::uint64_t>(id) + 1));
  state = splitmix64(state + static_cast<std::uint64_t>(index));
  Draw draw(state);

  for (int attempt = 0; attempt < 10000; ++attempt) {
    FamilySpec spec;
    spec.id = id;
    spec.degree_cap = degree_cap_;
    switch (id) {
      case FamilyId::AskeyWilson:
        for (const char* name : {"a", "b", "c", "d"}) spec.params[name] = draw.signed_unit(7);
        spec.params["q"] = draw.unit(5);
        break;
      case FamilyId::Jacobi:
        // alpha, beta in (-1, 4) on a quarter grid.
        spec.params["alpha"] = draw.grid(-3, 15, 4);
        spec.params["beta"] = draw.grid(-3, 15, 4);
        break;
      case FamilyId::CqJacobiEmbed49:
      case FamilyId::CqJacobiEmbed09:
        // Half-integers >= 0 keep every q^{alpha/2 + 1/4} an integer power of s.
        spec.params["alpha"] = draw.grid(0, 5, 2);
        spec.params["beta"] = draw.grid(0, 5, 2);
        spec.params["s"] = draw.unit(4);
        break;
      case FamilyId::CqUltraspherical:
        if (draw.integer(0, 1) == 0) {
          spec.params["t"] = draw.signed_unit(7);
          spec.params["s"] = draw.unit(5);
        } else {
          // Perfect squares admit the Askey-Wilson route with rational parameters.
          const Rational u = draw.unit(4);
          const Rational r = draw.unit(3);
          spec.params["t"] = u * u;
          spec.params["s"] = r * r;
        }
        break;
      case FamilyId::BigQJacobi:
        for (const char* name : {"a", "b", "c"}) spec.params[name] = draw.unit(7);
        spec.params["q"] = draw.unit(5);
        break;
    }
    try {
      check_admissible(spec);
      (void)build_family(spec);
      return spec;
    } catch (const InadmissibleParameters&) {
      continue;
    }
  }
  throw std::runtime_error("ParameterSampler: no admissible sample found");
}

}  // namespace awstruct
