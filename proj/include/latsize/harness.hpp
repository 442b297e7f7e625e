// Experiment runners and the counterexample check.
//
//   1  brute force on general (even trials) and width-one (odd trials) polytopes
//   2  layer algorithm vs brute force on White tetrahedra, p, q <= 14
//   3  reduced-basis search vs brute force on width-one polytopes
//   4  brute force with and without reduction first, width-one polytopes

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latsize/generators.hpp"
#include "latsize/io.hpp"

namespace latsize {

struct MethodRun {
  std::string method;
  std::optional<Int> value;
  /// Mean wall time of one call.
  double seconds = 0.0;
  std::string error;
};

struct TrialRecord {
  std::size_t index = 0;
  GenSpec spec;
  std::string digest;
  LatticePolytope polytope;
  std::vector<MethodRun> runs;
  /// Every run returned a value and all values are equal.
  bool agreement = false;
  std::string error;
};

struct ExperimentConfig {
  int id = 1;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  /// Experiment 3 only: 7 (counts 3..10) or 3 (counts 3..7).
  Int bound = 7;
  unsigned workers = 1;
};

struct TimingSummary {
  double mean = 0.0;
  double median = 0.0;
  std::size_t samples = 0;
};

struct ExperimentReport {
  ExperimentConfig config;
  /// Sorted by index.
  std::vector<TrialRecord> trials;
  Json summary;
};

/// GenSpec of trial `index`.
GenSpec experiment_spec(const ExperimentConfig& config, std::size_t index);

/// Throws std::domain_error on an unknown id or zero trials.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Regenerates the instance from rec.spec and runs the same methods again.
/// Throws std::logic_error if the regenerated polytope has a different digest.
TrialRecord replay(const TrialRecord& rec, int experiment);

/// Timing over runs of `method`, the warm-up trial (index 0) excluded.
TimingSummary summarize_times(const std::vector<TrialRecord>& trials, const std::string& method);

/// Runs f repeatedly for at least min_total seconds and returns the mean per call.
template <class F>
double time_per_call(F&& f, double min_total = 2e-3) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  std::size_t calls = 0;
  double elapsed = 0.0;
  do {
    f();
    ++calls;
    elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  } while (elapsed < min_total);
  return elapsed / static_cast<double>(calls);
}

Json to_json(const TrialRecord& rec);
Json to_json(const ExperimentReport& report);

struct Check {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
};

struct CounterexampleReport {
  std::vector<Check> checks;
  bool passed() const;
};

/// conv{(0,2,5), (0,-2,5), (0,1,-6), (1,-8,5), (1,2,-5), (1,-4,-3)}.
LatticePolytope counterexample_polytope();

/// Minimum of l1(AP) over unimodular A whose rows have the given norms, any order.
Int min_l1_over_norm_triple(const LatticePolytope& p, const std::array<Int, 3>& norms);

CounterexampleReport verify_counterexample();
Json to_json(const CounterexampleReport& report);

}  // namespace latsize
