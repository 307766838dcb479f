#include "awstruct/grid.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "awstruct/sampler.hpp"

namespace awstruct {

namespace {

struct Task {
  FamilyId family;
  int sample;
};

struct TaskResult {
  // One bucket per selected identity, in selection order.
  std::vector<std::vector<VerificationReport>> buckets;
  std::exception_ptr error;
};

VerificationReport crashed(const IdentityInfo& info, const FamilySpec& spec) {
  VerificationReport r;
  r.identity_id = std::string(info.id);
  r.family = spec.id;
  r.params = spec.params;
  r.status = Status::Fail;
  return r;
}

TaskResult run_task(const Task& task, const GridConfig& config,
                    const std::vector<const IdentityInfo*>& identities) {
  TaskResult out;
  out.buckets.resize(identities.size());
  FamilySpec spec;
  if (config.params) {
    spec.id = task.family;
    spec.params = *config.params;
    spec.degree_cap = config.degree_cap;
  } else {
    spec = ParameterSampler(config.seed, config.degree_cap).sample(task.family, task.sample);
  }

  const bool with_qdiff = std::any_of(identities.begin(), identities.end(), [&](const IdentityInfo* i) {
    return i->needs_qdiff && i->applies_to(task.family);
  });
  std::optional<FamilyContext> ctx;
  try {
    ctx.emplace(make_context(spec, with_qdiff));
  } catch (const InadmissibleParameters&) {
    out.error = std::current_exception();
    return out;
  } catch (const std::exception&) {
    // Context construction failing (e.g. no q-difference equation) fails
    // every identity that would have used it.
    for (std::size_t k = 0; k < identities.size(); ++k)
      if (identities[k]->applies_to(task.family)) out.buckets[k].push_back(crashed(*identities[k], spec));
    return out;
  }

  for (std::size_t k = 0; k < identities.size(); ++k) {
    const IdentityInfo& info = *identities[k];
    if (!info.applies_to(task.family)) continue;
    try {
      out.buckets[k] = run_identity(info, *ctx, config.n_max, config.perturb);
    } catch (const std::exception&) {
      out.buckets[k] = {crashed(info, spec)};
    }
  }
  return out;
}

}  // namespace

std::vector<const IdentityInfo*> select_identities(const std::vector<std::string>& ids) {
  std::vector<const IdentityInfo*> out;
  if (ids.empty()) {
    for (const auto& info : identity_registry()) out.push_back(&info);
    return out;
  }
  for (const auto& info : identity_registry()) {
    if (std::find(ids.begin(), ids.end(), info.id) != ids.end()) out.push_back(&info);
  }
  for (const auto& id : ids)
    if (!find_identity(id)) throw std::invalid_argument("unknown identity: " + id);
  return out;
}

std::vector<VerificationReport> run_grid(const GridConfig& config) {
  const auto identities = select_identities(config.identities);
  if (config.params && config.families.size() != 1)
    throw std::invalid_argument("fixed parameters require exactly one family");

  std::vector<FamilyId> families = config.families;
  std::sort(families.begin(), families.end());
  families.erase(std::unique(families.begin(), families.end()), families.end());
  const int samples = config.params ? 1 : config.samples;

  std::vector<Task> tasks;
  for (FamilyId f : families)
    for (int i = 0; i < samples; ++i) tasks.push_back({f, i});

  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      try {
        results[t] = run_task(tasks[t], config, identities);
      } catch (...) {
        results[t].error = std::current_exception();
      }
    }
  };
  unsigned threads = config.threads > 0 ? static_cast<unsigned>(config.threads) : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const auto& r : results)
    if (r.error) std::rethrow_exception(r.error);

  // Tasks are already in (family, sample) order; bucket k holds identity k.
  std::vector<VerificationReport> merged;
  for (std::size_t k = 0; k < identities.size(); ++k)
    for (const auto& r : results)
      for (const auto& report : r.buckets[k]) merged.push_back(report);
  return merged;
}

bool all_asserted_pass(const std::vector<VerificationReport>& reports) {
  return std::none_of(reports.begin(), reports.end(),
                      [](const VerificationReport& r) { return r.status == Status::Fail; });
}

}  // namespace awstruct
