#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "awstruct/grid.hpp"
#include "awstruct/limits.hpp"
#include "awstruct/report.hpp"
#include "awstruct/sampler.hpp"

using namespace awstruct;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
  /// Set when the failure is a documented defect of the stated identity.
  bool known_defect = false;
};

struct Tally {
  int pass = 0, fail = 0, info = 0;
  std::string first_failure;
};

Tally tally(const std::vector<VerificationReport>& reports) {
  Tally t;
  for (const auto& r : reports) {
    if (r.status == Status::Pass) ++t.pass;
    else if (r.status == Status::Info) ++t.info;
    else {
      if (t.fail++ == 0)
        t.first_failure = r.identity_id + "/" + std::string(family_name(r.family)) +
                          (r.n ? " n=" + std::to_string(*r.n) : std::string());
    }
  }
  return t;
}

Outcome grid_criterion(const std::vector<std::string>& ids, int n_max = 10) {
  GridConfig config;
  config.identities = ids;
  config.n_max = n_max;
  config.samples = 20;
  config.seed = 2024;
  const Tally t = tally(run_grid(config));
  Outcome o;
  o.pass = t.fail == 0 && t.pass > 0;
  o.detail = std::to_string(t.pass) + " pass, " + std::to_string(t.fail) + " fail";
  if (t.fail) o.detail += " (first: " + t.first_failure + ")";
  return o;
}

Outcome criterion_6() {
  Outcome web = grid_criterion({"eq51", "eq52", "eq53", "eq54", "eq55", "cqu-recurrence", "cqu-qdiff"});
  Outcome literal = grid_criterion({"cqu-combination"});
  Outcome corrected = grid_criterion({"cqu-combination-corrected"});
  Outcome o;
  o.pass = web.pass && literal.pass;
  o.detail = "relations: " + web.detail + "; (q-1)/(q+1) combination: " + literal.detail +
             "; (q^1/2-1)/-(q^1/2+1) combination: " + corrected.detail;
  o.known_defect = web.pass && !literal.pass && corrected.pass;
  return o;
}

Outcome criterion_8() {
  const auto start = std::chrono::steady_clock::now();
  AwToBigQConfig aw;
  aw.eps_steps = 8;
  const auto rows = limit_aw_to_bigq(aw);
  int run = 0, best = 0;
  for (const auto& r : rows) {
    run = r.ratio && *r.ratio >= 2 ? run + 1 : 0;
    best = std::max(best, run);
  }
  const bool a_ok = best >= 6;

  int cases = 0, bad = 0;
  std::string first_bad;
  for (int al = 0; al <= 2; ++al)
    for (int be = 0; be <= 2; ++be)
      for (int n = 0; n <= 5; ++n) {
        CqJacobiToJacobiConfig cq;
        cq.alpha = al;
        cq.beta = be;
        cq.n = n;
        cq.k_min = 3;
        cq.k_max = 10;
        ++cases;
        if (!converges(limit_cqjacobi_to_jacobi(cq), 1.5L, 1e-12L) && bad++ == 0)
          first_bad = "alpha=" + std::to_string(al) + " beta=" + std::to_string(be) + " n=" + std::to_string(n);
      }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome o;
  o.pass = a_ok && bad == 0 && secs < 60;
  o.detail = "eps path: " + std::to_string(best) + " consecutive halvings; q path: " +
             std::to_string(cases - bad) + "/" + std::to_string(cases) + " cases" +
             (bad ? " (first: " + first_bad + ")" : std::string()) + "; " + std::to_string(secs).substr(0, 5) + " s";
  return o;
}

Outcome criterion_9() {
  const ParameterSampler sampler(5);
  int mutations = 0, survived = 0;
  std::string first;
  for (const IdentityInfo& info : identity_registry()) {
    for (FamilyId id : info.families) {
      std::vector<FamilyContext> contexts;
      for (int s = 0; s < 4; ++s) contexts.push_back(make_context(sampler.sample(id, s), info.needs_qdiff));
      for (int slot = 0; slot < info.slots; ++slot) {
        bool broken = false;
        for (const FamilyContext& ctx : contexts) {
          const auto clean = run_identity(info, ctx, 10);
          const auto bumped = run_identity(info, ctx, 10, slot);
          for (std::size_t k = 0; k < bumped.size() && !broken; ++k) {
            if (info.expect == Expect::Informational) {
              const auto& a = bumped[k].residual;
              const auto& b = clean[k].residual;
              broken = a.has_value() != b.has_value() || (a && a->coeffs != b->coeffs);
            } else {
              broken = bumped[k].status == Status::Fail;
            }
          }
        }
        ++mutations;
        if (!broken && survived++ == 0)
          first = std::string(info.id) + "/" + std::string(family_name(id)) + " slot " + std::to_string(slot);
      }
    }
  }
  Outcome o;
  o.pass = survived == 0;
  o.detail = std::to_string(mutations - survived) + "/" + std::to_string(mutations) + " mutations detected" +
             (survived ? " (first survivor: " + first + ")" : std::string());
  return o;
}

Outcome criterion_10() {
  GridConfig config;
  config.samples = 3;
  config.n_max = 6;
  config.seed = 77;
  const RunInfo run{config.seed, config.degree_cap, std::nullopt};
  config.threads = 1;
  const std::string a = reports_to_json(run, run_grid(config)).dump(2);
  config.threads = 4;
  const std::string b = reports_to_json(run, run_grid(config)).dump(2);
  config.threads = 0;
  const std::string c = reports_to_json(run, run_grid(config)).dump(2);
  Outcome o;
  o.pass = a == b && b == c && !a.empty();
  o.detail = std::to_string(a.size()) + " bytes, " + (o.pass ? "identical" : "differs") + " across 1, 4 and default threads";
  return o;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::pair<std::string, Outcome>> results;
  auto record = [&](std::string name, Outcome o) {
    std::printf("%s  %s: %s%s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(),
                o.known_defect ? " [known defect: the stated weights do not hold]" : "");
    std::fflush(stdout);
    results.emplace_back(std::move(name), std::move(o));
  };

  record("1 exact structure relations", grid_criterion({"eq28", "eq18", "eq26", "eq02", "eq40", "eq54", "eq59", "eq59t"}));
  record("2 lowering and raising", grid_criterion({"eq31", "eq32", "eq76", "eq77", "bangerezako"}));
  record("3 operator identities", grid_criterion({"eq65", "eq67", "eq74", "sklyanin"}));
  record("4 spectral data", grid_criterion({"eq64", "eq66"}));
  record("5 skew symmetry and symmetry", grid_criterion({"eq24", "symmetry-D", "symmetry-X", "eq53-nonskew"}));
  record("6 q-ultraspherical web", criterion_6());
  record("7 big q-Jacobi reduction", grid_criterion({"qdiff", "eq42", "eq41"}));
  record("8 limits", criterion_8());
  record("9 negative controls", criterion_9());
  record("10 determinism", criterion_10());

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  int unexpected = 0, passed = 0;
  for (const auto& [name, o] : results) {
    if (o.pass) ++passed;
    else if (!o.known_defect) ++unexpected;
  }
  std::printf("%d/%zu criteria pass, %d unexpected failures, %.1f s\n", passed, results.size(), unexpected, secs);
  return unexpected == 0 ? 0 : 1;
}
