// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "latsize/harness.hpp"
#include "properties.hpp"

using namespace latsize;

namespace {

constexpr std::uint64_t kSeed = 2024;

int failed = 0;

void report(const std::string& id, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << "  " << id << "  " << detail << std::endl;
  failed += !pass;
}

double median(std::vector<double> v) {
  std::ranges::sort(v);
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

std::vector<LatticePolytope> white_instances(std::size_t count) {
  std::vector<LatticePolytope> out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto [p, q] = random_white_parameters({.kind = GenKind::white, .bound = 14, .seed = trial_seed(kSeed, i)});
    out.push_back(white_tetrahedron(p, q));
  }
  return out;
}

void criterion1() {
  const LatticePolytope p = counterexample_polytope();
  const Int bf = ls_bruteforce(p).value;
  const Int printed = l1(apply_map(p, UnimodularMap::linear(3, {IntVec{1, 0, 0}, {2, -1, 0}, {7, 2, 1}})));
  const Int rs = reduced_search(p).value;
  const auto norms = minkowski_basis(p).norms;
  const bool pass = bf == 13 && printed == 13 && rs == 14 && norms == std::array<Int, 3>{1, 10, 11} &&
                    verify_counterexample().passed();
  std::ostringstream s;
  s << "brute=" << bf << " printed-matrix l1=" << printed << " reduced_search=" << rs << " norms=(" << norms[0]
    << "," << norms[1] << "," << norms[2] << ")";
  report("1 counterexample regression", pass, s.str());
}

void criterion2(const std::vector<LatticePolytope>& whites) {
  int white_ok = 0, par_ok = 0, par_empty = 0;
  for (const LatticePolytope& w : whites) white_ok += ls_width_one(w).value == ls_bruteforce(w).value;
  for (std::size_t i = 0; i < 25; ++i) {
    const auto [a, b, c, d] =
        random_parallelepiped_parameters({.kind = GenKind::parallelepiped, .seed = trial_seed(kSeed + 1, i)});
    const LatticePolytope p = empty_parallelepiped(a, b, c, d);
    par_empty += is_empty_polytope(p);
    par_ok += ls_width_one(p).value == ls_bruteforce(p).value;
  }
  std::ostringstream s;
  s << "white " << white_ok << "/25, parallelepipeds " << par_ok << "/25 (empty " << par_empty << "/25)";
  report("2 layer algorithm equals brute force on empty polytopes", white_ok == 25 && par_ok == 25 && par_empty == 25,
         s.str());
}

void criterion3(const std::vector<LatticePolytope>& whites) {
  std::vector<double> fast, slow;
  for (const LatticePolytope& w : whites) {
    fast.push_back(time_per_call([&] { return ls_width_one(w); }));
    slow.push_back(time_per_call([&] { return ls_bruteforce(w); }));
  }
  const double ratio = median(slow) / median(fast);
  char buf[160];
  std::snprintf(buf, sizeof buf, "median layer %.3g s, median brute %.3g s, ratio %.1fx (need >= 50x)", median(fast),
                median(slow), ratio);
  report("3 layer algorithm speedup", ratio >= 50.0, buf);
}

void criterion4() {
  // Trial 0 is the warm-up and is excluded from the timing summary.
  const ExperimentReport r = run_experiment({.id = 4, .trials = 21, .seed = kSeed});
  const double speedup = r.summary["speedup_median"].get<double>();
  const bool agree = r.summary["agreement_rate"].get<double>() == 1.0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "median speedup %.2fx over 20 timed instances (need >= 1.5x), values agree: %s",
                speedup, agree ? "yes" : "no");
  report("4 reduce-first brute force speedup", speedup >= 1.5 && agree, buf);
}

void criterion5() {
  int ok = 0, applicable = 0;
  for (std::size_t i = 0; i < 20; ++i) {
    const LatticePolytope p =
        random_interior_class({.kind = GenKind::interior, .n1 = {1, 3}, .seed = trial_seed(kSeed + 2, i)});
    const auto r = ls_interior_class(p);
    applicable += r.has_value();
    ok += r.has_value() && r->value == ls_bruteforce(p, {.reduce_first = true}).value;
  }
  report("5 interior class equals brute force", ok == 20,
         std::to_string(ok) + "/20 equal, hypothesis detected " + std::to_string(applicable) + "/20");
}

void criterion6() {
  const auto outcomes = properties::all(200, kSeed + 3);
  int bad = 0;
  std::ostringstream s;
  for (const auto& o : outcomes) {
    if (!o.ok()) {
      ++bad;
      s << " [" << o.name << ": " << o.failures << "/" << o.cases << " failed, e.g. " << o.first_failure << "]";
    }
  }
  report("6 invariant suite", bad == 0,
         std::to_string(outcomes.size() - static_cast<std::size_t>(bad)) + "/" + std::to_string(outcomes.size()) +
             " properties hold" + s.str());
}

void criterion7() {
  int ok = 0;
  for (const LatticePolytope& w : white_instances(50)) ok += is_empty_polytope(w) && lattice_width(w).first == 1;
  report("7 white tetrahedra empty with width one", ok == 50, std::to_string(ok) + "/50");
}

void experiment3_replay() {
  const ExperimentReport r = run_experiment({.id = 3, .trials = 500, .seed = kSeed, .workers = 2});
  int genuine = 0;
  const Json& dis = r.summary["disagreements"];
  for (const Json& idx : dis) {
    const TrialRecord rec = replay(r.trials[idx.get<std::size_t>()], 3);
    genuine += rec.runs[0].value && rec.runs[1].value && *rec.runs[0].value > *rec.runs[1].value;
  }
  const bool pass = r.summary["failures"].get<int>() == 0 && genuine == static_cast<int>(dis.size());
  report("experiment 3 disagreements replay", pass,
         std::to_string(dis.size()) + " disagreements in 500 trials, " + std::to_string(genuine) + " replay as reduced > brute");
}

}  // namespace

int main() {
  const auto whites = white_instances(25);
  criterion1();
  criterion2(whites);
  criterion3(whites);
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  experiment3_replay();
  return failed ? 1 : 0;
}
