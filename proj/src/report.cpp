#include "awstruct/report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

namespace awstruct {

namespace {

std::string format_long_double(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10Le", v);
  return buf;
}

}  // namespace

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["identity_id"] = report.identity_id;
  j["family"] = std::string(family_name(report.family));
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : report.params) params[name] = to_fraction_string(value);
  j["params"] = params;
  j["n"] = report.n ? nlohmann::ordered_json(*report.n) : nlohmann::ordered_json(nullptr);
  j["status"] = std::string(status_name(report.status));
  if (report.residual) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto& c : report.residual->coeffs) coeffs.push_back(to_fraction_string(c));
    j["residual"] = {{"degree", report.residual->degree}, {"coeffs", coeffs}};
  } else {
    j["residual"] = nullptr;
  }
  return j;
}

nlohmann::ordered_json reports_to_json(const RunInfo& run, const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json j;
  j["run"]["seed"] = run.seed;
  j["run"]["degree_cap"] = run.degree_cap;
  j["run"]["timestamp"] = run.timestamp ? nlohmann::ordered_json(*run.timestamp) : nlohmann::ordered_json(nullptr);
  j["results"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) j["results"].push_back(report_to_json(r));
  return j;
}

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
  out << "step,parameter_value,max_deviation,ratio\n";
  for (const auto& row : rows) {
    out << row.step << ',' << row.parameter_value << ',' << format_long_double(row.max_deviation) << ',';
    if (row.ratio) out << format_long_double(*row.ratio);
    out << '\n';
  }
}

}  // namespace awstruct
