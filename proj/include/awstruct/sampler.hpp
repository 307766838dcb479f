#pragma once

#include <cstdint>

#include "awstruct/families.hpp"

namespace awstruct {

/// Deterministic sampler of admissible rational parameter points.
///
/// Sample i of family F depends only on (seed, F, i), so selecting a subset
/// of families or identities never changes which points are drawn. Candidate
/// points are drawn from small-height rationals with family-appropriate sign
/// constraints and rejected unless build_family accepts them.
class ParameterSampler {
 public:
  explicit ParameterSampler(std::uint64_t seed, int degree_cap = kDefaultDegreeCap)
      : seed_(seed), degree_cap_(degree_cap) {}

  FamilySpec sample(FamilyId id, int index) const;

 private:
  std::uint64_t seed_;
  int degree_cap_;
};

}  // namespace awstruct
