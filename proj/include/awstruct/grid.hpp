#pragma once

/// \file
/// The verification grid: identity x family x sample x n, evaluated in
/// parallel over samples and merged into a deterministic order.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "awstruct/relations.hpp"

namespace awstruct {

struct GridConfig {
  std::vector<FamilyId> families{kAllFamilies.begin(), kAllFamilies.end()};
  /// Identity ids; empty selects the whole registry.
  std::vector<std::string> identities;
  int n_max = 10;
  int samples = 20;
  std::uint64_t seed = 0;
  int degree_cap = kDefaultDegreeCap;
  /// Single fixed parameter point instead of sampling (one family only).
  std::optional<ParamMap> params;
  /// 0 selects the hardware concurrency.
  int threads = 0;
  /// Negative-control slot passed to every checker (-1 for none).
  int perturb = -1;
};

/// Resolves identity ids against the registry; throws std::invalid_argument
/// on unknown ids.
std::vector<const IdentityInfo*> select_identities(const std::vector<std::string>& ids);

/// Reports ordered by identity (registry order), family, sample, then n.
/// A checker that throws is reported as a failure without a residual.
std::vector<VerificationReport> run_grid(const GridConfig& config);

/// True iff no asserted check failed; informational reports never count.
bool all_asserted_pass(const std::vector<VerificationReport>& reports);

}  // namespace awstruct
