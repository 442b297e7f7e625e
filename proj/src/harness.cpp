#include "latsize/harness.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>

namespace latsize {
namespace {

struct MethodSpec {
  std::string name;
  std::function<Int(const LatticePolytope&)> run;
};

std::vector<MethodSpec> experiment_methods(int id) {
  const MethodSpec brute{"brute", [](const LatticePolytope& p) { return ls_bruteforce(p).value; }};
  switch (id) {
    case 1: return {brute};
    case 2: return {{"slab", [](const LatticePolytope& p) { return ls_width_one(p).value; }}, brute};
    case 3: return {{"reduced_search", [](const LatticePolytope& p) { return reduced_search(p).value; }}, brute};
    case 4:
      return {brute, {"brute_reduce_first", [](const LatticePolytope& p) {
                        return ls_bruteforce(p, {.reduce_first = true}).value;
                      }}};
    default: throw std::domain_error("unknown experiment id " + std::to_string(id));
  }
}

void check_config(const ExperimentConfig& config) {
  experiment_methods(config.id);
  if (config.trials < 1) throw std::domain_error("experiment: trials must be >= 1");
  if (config.id == 3 && config.bound != 7 && config.bound != 3) {
    throw std::domain_error("experiment 3: bound must be 7 or 3");
  }
}

TrialRecord run_trial(const GenSpec& spec, std::size_t index, const std::vector<MethodSpec>& methods) {
  TrialRecord rec;
  rec.index = index;
  rec.spec = spec;
  try {
    rec.polytope = generate(spec);
  } catch (const std::exception& e) {
    rec.error = e.what();
    return rec;
  }
  rec.digest = digest(rec.polytope);
  for (const MethodSpec& m : methods) {
    MethodRun run{m.name, std::nullopt, 0.0, ""};
    try {
      Int value = 0;
      run.seconds = time_per_call([&] { value = m.run(rec.polytope); });
      run.value = value;
    } catch (const std::exception& e) {
      run.error = e.what();
    }
    rec.runs.push_back(run);
  }
  rec.agreement = std::all_of(rec.runs.begin(), rec.runs.end(), [&](const MethodRun& r) {
    return r.value && r.value == rec.runs.front().value;
  });
  return rec;
}

double median_of(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 == 1 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

Json timing_json(const TimingSummary& t) {
  return {{"mean_seconds", t.mean}, {"median_seconds", t.median}, {"samples", t.samples}};
}

std::optional<Int> run_value(const TrialRecord& rec, const std::string& method) {
  for (const MethodRun& r : rec.runs)
    if (r.method == method) return r.value;
  return std::nullopt;
}

Json summarize(const ExperimentConfig& config, const std::vector<TrialRecord>& trials) {
  Json s;
  std::size_t agree = 0, failures = 0;
  for (const TrialRecord& t : trials) {
    agree += t.agreement ? 1 : 0;
    const bool failed = !t.error.empty() || std::any_of(t.runs.begin(), t.runs.end(),
                                                        [](const MethodRun& r) { return !r.error.empty(); });
    failures += failed ? 1 : 0;
  }
  s["trials"] = trials.size();
  s["failures"] = failures;
  s["agreement_rate"] = static_cast<double>(agree) / static_cast<double>(trials.size());

  Json timing;
  for (const MethodSpec& m : experiment_methods(config.id)) timing[m.name] = timing_json(summarize_times(trials, m.name));
  s["timing"] = timing;

  switch (config.id) {
    case 1: {
      std::vector<TrialRecord> general, layered;
      for (const TrialRecord& t : trials) (t.spec.kind == GenKind::general ? general : layered).push_back(t);
      s["timing_general"] = timing_json(summarize_times(general, "brute"));
      s["timing_width_one"] = timing_json(summarize_times(layered, "brute"));
      break;
    }
    case 2: {
      s["equality_rate"] = s["agreement_rate"];
      const TimingSummary fast = summarize_times(trials, "slab"), slow = summarize_times(trials, "brute");
      s["speedup_median"] = fast.median > 0 ? slow.median / fast.median : 0.0;
      break;
    }
    case 3: {
      Json gaps = Json::array();
      for (const TrialRecord& t : trials) {
        const auto reduced = run_value(t, "reduced_search"), brute = run_value(t, "brute");
        if (reduced && brute && *reduced != *brute) gaps.push_back(t.index);
      }
      s["disagreements"] = gaps;
      s["disagreement_rate"] = static_cast<double>(gaps.size()) / static_cast<double>(trials.size());
      break;
    }
    case 4: {
      const TimingSummary plain = summarize_times(trials, "brute");
      const TimingSummary reduced = summarize_times(trials, "brute_reduce_first");
      s["speedup_median"] = reduced.median > 0 ? plain.median / reduced.median : 0.0;
      s["speedup_mean"] = reduced.mean > 0 ? plain.mean / reduced.mean : 0.0;
      break;
    }
    default: break;
  }
  return s;
}

}  // namespace

GenSpec experiment_spec(const ExperimentConfig& config, std::size_t index) {
  GenSpec spec;
  spec.seed = trial_seed(config.seed, index);
  switch (config.id) {
    case 1:
      if (index % 2 == 0) {
        spec.kind = GenKind::general;
        spec.n = {10, 15};
      } else {
        spec.kind = GenKind::width_one;
        spec.n0 = spec.n1 = {5, 8};
      }
      spec.bound = 7;
      break;
    case 2:
      spec.kind = GenKind::white;
      spec.bound = 14;
      break;
    case 3:
      spec.kind = GenKind::width_one;
      spec.bound = config.bound;
      spec.n0 = spec.n1 = config.bound == 3 ? CountRange{3, 7} : CountRange{3, 10};
      break;
    case 4:
      spec.kind = GenKind::width_one;
      spec.bound = 7;
      spec.n0 = spec.n1 = {3, 10};
      break;
    default: throw std::domain_error("unknown experiment id " + std::to_string(config.id));
  }
  return spec;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  check_config(config);
  const std::vector<MethodSpec> methods = experiment_methods(config.id);
  ExperimentReport report;
  report.config = config;
  report.trials.resize(config.trials);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < config.trials; k = next++) {
      report.trials[k] = run_trial(experiment_spec(config, k), k, methods);
    }
  };
  const unsigned workers = std::max(1u, config.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  report.summary = summarize(config, report.trials);
  return report;
}

TrialRecord replay(const TrialRecord& rec, int experiment) {
  TrialRecord again = run_trial(rec.spec, rec.index, experiment_methods(experiment));
  if (again.digest != rec.digest) {
    throw std::logic_error("replay: trial " + std::to_string(rec.index) + " regenerated a different polytope");
  }
  return again;
}

TimingSummary summarize_times(const std::vector<TrialRecord>& trials, const std::string& method) {
  std::vector<double> xs;
  for (const TrialRecord& t : trials) {
    if (t.index == 0) continue;
    for (const MethodRun& r : t.runs)
      if (r.method == method && r.value) xs.push_back(r.seconds);
  }
  TimingSummary out;
  out.samples = xs.size();
  if (xs.empty()) return out;
  double total = 0.0;
  for (double x : xs) total += x;
  out.mean = total / static_cast<double>(xs.size());
  out.median = median_of(xs);
  return out;
}

Json to_json(const TrialRecord& rec) {
  Json runs = Json::array();
  for (const MethodRun& r : rec.runs) {
    Json j{{"method", r.method}, {"seconds", r.seconds}};
    j["value"] = r.value ? Json(*r.value) : Json(nullptr);
    if (!r.error.empty()) j["error"] = r.error;
    runs.push_back(j);
  }
  Json out{{"index", rec.index}, {"spec", to_json(rec.spec)}, {"digest", rec.digest},
           {"runs", runs},       {"agreement", rec.agreement}};
  if (rec.error.empty()) out["polytope"] = to_json(rec.polytope);
  else out["error"] = rec.error;
  return out;
}

Json to_json(const ExperimentReport& report) {
  Json trials = Json::array();
  for (const TrialRecord& t : report.trials) trials.push_back(to_json(t));
  Json config{{"trials", report.config.trials}, {"seed", report.config.seed}, {"workers", report.config.workers}};
  if (report.config.id == 3) config["bound"] = report.config.bound;
  return {{"experiment", report.config.id}, {"config", config}, {"trials", trials}, {"summary", report.summary}};
}

bool CounterexampleReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

LatticePolytope counterexample_polytope() {
  const std::vector<IntVec> pts{{0, 2, 5}, {0, -2, 5}, {0, 1, -6}, {1, -8, 5}, {1, 2, -5}, {1, -4, -3}};
  return convex_hull(3, pts);
}

Int min_l1_over_norm_triple(const LatticePolytope& p, const std::array<Int, 3>& norms) {
  const Int top = *std::max_element(norms.begin(), norms.end());
  const CandidateSet cands = enumerate_short_directions(p, top + 1);
  std::array<std::vector<IntVec>, 3> groups;
  for (std::size_t k = 0; k < cands.directions.size(); ++k)
    for (std::size_t i = 0; i < 3; ++i)
      if (cands.widths[k] == norms[i]) groups[i].push_back(cands.directions[k].vec());

  Int best = std::numeric_limits<Int>::max();
  for (const IntVec& h1 : groups[0]) {
    for (const IntVec& h2 : groups[1]) {
      for (const IntVec& h3 : groups[2]) {
        const Int d = det({h1, h2, h3});
        if (d != 1 && d != -1) continue;
        for (unsigned mask = 0; mask < 8; ++mask) {
          const IntMat a{scale(mask & 1u ? -1 : 1, h1), scale(mask & 2u ? -1 : 1, h2), scale(mask & 4u ? -1 : 1, h3)};
          best = std::min(best, l1(transform(p.vertices(), UnimodularMap::linear(3, a)), 3));
        }
      }
    }
  }
  if (best == std::numeric_limits<Int>::max()) throw std::domain_error("no unimodular matrix with these row norms");
  return best;
}

CounterexampleReport verify_counterexample() {
  const LatticePolytope p = counterexample_polytope();
  CounterexampleReport report;
  auto add = [&](std::string name, bool ok, std::string expected, std::string actual) {
    report.checks.push_back({std::move(name), ok, std::move(expected), std::move(actual)});
  };

  const IntMat printed{IntVec{1, 0, 0}, IntVec{2, -1, 0}, IntVec{7, 2, 1}};
  const Int brute = ls_bruteforce(p).value;
  const Int printed_l1 = l1(transform(p.vertices(), UnimodularMap::linear(3, printed)), 3);
  add("brute force value 13, attained by " + to_string(printed), brute == 13 && printed_l1 == 13,
      "ls = 13, l1(AP) = 13", "ls = " + std::to_string(brute) + ", l1(AP) = " + std::to_string(printed_l1));

  const Int reduced = reduced_search(p).value;
  add("reduced-basis search value 14", reduced == 14, "14", std::to_string(reduced));

  const Basis mink = minkowski_basis(p);
  const std::array<Int, 3> norms{mink.norms[0], mink.norms[1], mink.norms[2]};
  auto show = [](const std::array<Int, 3>& n) {
    return "(" + std::to_string(n[0]) + "," + std::to_string(n[1]) + "," + std::to_string(n[2]) + ")";
  };
  add("Minkowski norms (1,10,11)", norms == std::array<Int, 3>{1, 10, 11}, "(1,10,11)", show(norms));

  add("||h3|| >= ||h1|| + ||h2||", norms[2] >= norms[0] + norms[1],
      std::to_string(norms[2]) + " >= " + std::to_string(norms[0] + norms[1]), norms[2] >= norms[0] + norms[1] ? "holds" : "fails");

  const Int exhaustive = min_l1_over_norm_triple(p, {1, 10, 11});
  add("minimum over all bases with norms (1,10,11) is 14", exhaustive == 14, "14", std::to_string(exhaustive));
  return report;
}

Json to_json(const CounterexampleReport& report) {
  Json checks = Json::array();
  for (const Check& c : report.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"expected", c.expected}, {"actual", c.actual}});
  }
  return {{"passed", report.passed()}, {"checks", checks}};
}

}  // namespace latsize
