#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <sstream>

#include "awstruct/grid.hpp"
#include "awstruct/limits.hpp"
#include "awstruct/report.hpp"

namespace awstruct::cli {

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<FamilyId> parse_families(const std::string& text) {
  std::vector<FamilyId> out;
  for (const auto& name : split(text, ',')) {
    if (name == "all") return {kAllFamilies.begin(), kAllFamilies.end()};
    if (name == "cq-jacobi") {
      out.push_back(FamilyId::CqJacobiEmbed49);
      out.push_back(FamilyId::CqJacobiEmbed09);
      continue;
    }
    const auto id = family_from_name(name);
    if (!id) throw UsageError("unknown family: " + name);
    out.push_back(*id);
  }
  if (out.empty()) throw UsageError("no family selected");
  return out;
}

std::vector<std::string> parse_identities(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& id : split(text, ',')) {
    if (id == "all") return {};
    if (!find_identity(id)) throw UsageError("unknown identity: " + id);
    out.push_back(id);
  }
  return out;
}

ParamMap parse_params(const std::string& text) {
  ParamMap out;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("expected name=value in --params: " + item);
    try {
      out[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("bad rational in --params: ") + e.what());
    }
  }
  return out;
}

Rational rational_arg(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("bad rational for " + flag + ": " + text);
  }
}

struct VerifyOptions {
  std::string family = "all";
  std::string identity = "all";
  int n_max = 10;
  int samples = 20;
  std::uint64_t seed = 0;
  int degree_cap = kDefaultDegreeCap;
  std::string params;
  std::string out;
  std::string summary_csv;
  int threads = 0;
  bool no_timestamp = false;
};

struct LimitsOptions {
  std::string which;
  std::string alpha = "1";
  std::string beta = "2";
  int n = 3;
  int eps_steps = 8;
  std::string a = "1/3";
  std::string b = "1/4";
  std::string c = "1/5";
  std::string q = "1/2";
  int k_min = 3;
  int k_max = 10;
  std::string out;
};

void write_summary_csv(const std::string& path, const std::vector<VerificationReport>& reports) {
  std::map<std::pair<std::string, std::string>, std::array<int, 3>> counts;
  std::vector<std::pair<std::string, std::string>> order;
  for (const auto& r : reports) {
    const auto key = std::make_pair(r.identity_id, std::string(family_name(r.family)));
    if (!counts.count(key)) order.push_back(key);
    counts[key][static_cast<std::size_t>(r.status)] += 1;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << "identity_id,family,pass,fail,info\n";
  for (const auto& key : order) {
    const auto& c = counts[key];
    out << key.first << ',' << key.second << ',' << c[0] << ',' << c[1] << ',' << c[2] << '\n';
  }
}

int run_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  GridConfig config;
  config.families = parse_families(o.family);
  config.identities = parse_identities(o.identity);
  config.n_max = o.n_max;
  config.samples = o.samples;
  config.seed = o.seed;
  config.degree_cap = o.degree_cap;
  config.threads = o.threads;
  if (o.n_max < 0 || o.samples < 1 || o.degree_cap < 2) throw UsageError("n-max, samples or degree-cap out of range");
  if (!o.params.empty()) {
    if (config.families.size() != 1) throw UsageError("--params needs exactly one --family");
    config.params = parse_params(o.params);
  }

  std::vector<VerificationReport> reports;
  try {
    reports = run_grid(config);
  } catch (const InadmissibleParameters& e) {
    throw UsageError(std::string("inadmissible parameters: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  RunInfo run{o.seed, o.degree_cap, std::nullopt};
  if (!o.no_timestamp) run.timestamp = utc_timestamp();
  const std::string text = reports_to_json(run, reports).dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw UsageError("cannot write " + o.out);
    file << text;
  }
  if (!o.summary_csv.empty()) write_summary_csv(o.summary_csv, reports);

  int pass = 0, fail = 0, info = 0;
  for (const auto& r : reports) {
    if (r.status == Status::Pass) ++pass;
    if (r.status == Status::Fail) ++fail;
    if (r.status == Status::Info) ++info;
  }
  err << "checks: " << reports.size() << " pass: " << pass << " fail: " << fail << " info: " << info << '\n';
  return fail == 0 ? 0 : kExitFailure;
}

int run_limits(const LimitsOptions& o, std::ostream& out) {
  std::vector<ConvergenceRow> rows;
  bool ok = false;
  if (o.which == "aw-to-bigq") {
    AwToBigQConfig config;
    config.a = rational_arg("--a", o.a);
    config.b = rational_arg("--b", o.b);
    config.c = rational_arg("--c", o.c);
    config.q = rational_arg("--q", o.q);
    config.n_max = o.n;
    config.eps_steps = o.eps_steps;
    if (config.n_max < 0 || config.eps_steps < 1) throw UsageError("n or eps-steps out of range");
    rows = limit_aw_to_bigq(config);
    ok = converges(rows, 2);
  } else if (o.which == "cqjacobi-to-jacobi") {
    CqJacobiToJacobiConfig config;
    config.alpha = rational_arg("--alpha", o.alpha);
    config.beta = rational_arg("--beta", o.beta);
    config.n = o.n;
    config.k_min = o.k_min;
    config.k_max = o.k_max;
    if (config.alpha <= -1 || config.beta <= -1) throw UsageError("alpha and beta must exceed -1");
    if (config.n < 0 || config.n > 10 || config.k_min < 1 || config.k_max < config.k_min || config.k_max > 30)
      throw UsageError("n or k range out of bounds");
    rows = limit_cqjacobi_to_jacobi(config);
    ok = converges(rows, 1.5L, 1e-12L);
  } else {
    throw UsageError("unknown --which: " + o.which);
  }

  if (o.out.empty()) {
    write_convergence_csv(out, rows);
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw UsageError("cannot write " + o.out);
    write_convergence_csv(file, rows);
  }
  return ok ? 0 : kExitFailure;
}

/// Flat key=value files: keys without a section belong to the subcommand
/// being run.
class FlatConfig : public CLI::ConfigTOML {
 public:
  explicit FlatConfig(const CLI::App* app) : app_(app) {}

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    std::vector<CLI::ConfigItem> items = CLI::ConfigTOML::from_config(input);
    const std::string sub = app_->got_subcommand("limits") ? "limits" : "verify";
    for (auto& item : items)
      if (item.parents.empty() && item.name != "config") item.parents = {sub};
    return items;
  }

 private:
  const CLI::App* app_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of structure relations for Askey-Wilson type polynomials", "awstruct"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value file mirroring the flags");
  app.config_formatter(std::make_shared<FlatConfig>(&app));

  VerifyOptions v;
  CLI::App* verify = app.add_subcommand("verify", "Run identity checks over sampled parameter points");
  verify->fallthrough();
  verify->add_option("--family", v.family, "Family name, comma list, or all")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::Join)->capture_default_str();
  verify->add_option("--identity", v.identity, "Identity id, comma list, or all")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::Join)->capture_default_str();
  verify->add_option("--n-max", v.n_max, "Largest degree index")->capture_default_str();
  verify->add_option("--samples", v.samples, "Parameter samples per family")->capture_default_str();
  verify->add_option("--seed", v.seed, "Sampling seed")->capture_default_str();
  verify->add_option("--degree-cap", v.degree_cap, "Degree cap N")->capture_default_str();
  verify->add_option("--params", v.params, "Fixed point, e.g. a=1/3,b=1/4,c=1/5,q=1/2")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::Join);
  verify->add_option("--out", v.out, "JSON report path (default: stdout)");
  verify->add_option("--summary-csv", v.summary_csv, "Per identity and family counts");
  verify->add_option("--threads", v.threads, "Worker threads (0: hardware)")->capture_default_str();
  verify->add_flag("--no-timestamp", v.no_timestamp, "Write null for the run timestamp");

  LimitsOptions l;
  CLI::App* limits = app.add_subcommand("limits", "Convergence tables for the limit transitions");
  limits->fallthrough();
  limits->add_option("--which", l.which, "aw-to-bigq or cqjacobi-to-jacobi")->required();
  limits->add_option("--alpha", l.alpha)->capture_default_str();
  limits->add_option("--beta", l.beta)->capture_default_str();
  limits->add_option("--n", l.n, "Degree (largest degree for aw-to-bigq)")->capture_default_str();
  limits->add_option("--eps-steps", l.eps_steps)->capture_default_str();
  limits->add_option("--a", l.a)->capture_default_str();
  limits->add_option("--b", l.b)->capture_default_str();
  limits->add_option("--c", l.c)->capture_default_str();
  limits->add_option("--q", l.q)->capture_default_str();
  limits->add_option("--k-min", l.k_min)->capture_default_str();
  limits->add_option("--k-max", l.k_max)->capture_default_str();
  limits->add_option("--out", l.out, "CSV path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n\n";
    const CLI::App* failing = verify->parsed() ? verify : limits->parsed() ? limits : &app;
    err << failing->help();
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return run_verify(v, out, err);
    return run_limits(l, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace awstruct::cli
