#pragma once

/// \file
/// Serialization of verification reports (JSON) and convergence tables (CSV).

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "awstruct/relations.hpp"

namespace awstruct {

struct RunInfo {
  std::uint64_t seed = 0;
  int degree_cap = kDefaultDegreeCap;
  /// ISO-8601 UTC; nullopt serializes as null.
  std::optional<std::string> timestamp;
};

std::string utc_timestamp();

nlohmann::ordered_json report_to_json(const VerificationReport& report);
nlohmann::ordered_json reports_to_json(const RunInfo& run, const std::vector<VerificationReport>& reports);

struct ConvergenceRow {
  int step = 0;
  std::string parameter_value;
  long double max_deviation = 0;
  /// Deviation of the previous step divided by this one.
  std::optional<long double> ratio;
};

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows);

}  // namespace awstruct
