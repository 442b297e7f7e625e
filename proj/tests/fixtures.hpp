// Named polytopes and seeded random instances shared by the test suites.
#pragma once

#include <vector>

#include "latsize/core.hpp"
#include "latsize/generators.hpp"
#include "latsize/harness.hpp"

namespace fixtures {

using namespace latsize;

inline LatticePolytope hull3(std::vector<IntVec> pts) { return convex_hull(3, pts); }
inline LatticePolytope hull2(std::vector<IntVec> pts) { return convex_hull(2, pts); }

inline LatticePolytope simplex3(Int k = 1) { return hull3({{0, 0, 0}, {k, 0, 0}, {0, k, 0}, {0, 0, k}}); }
inline LatticePolytope simplex2(Int k = 1) { return hull2({{0, 0, 0}, {k, 0, 0}, {0, k, 0}}); }
inline LatticePolytope cube() {
  std::vector<IntVec> pts;
  for (Int a = 0; a <= 1; ++a)
    for (Int b = 0; b <= 1; ++b)
      for (Int c = 0; c <= 1; ++c) pts.push_back({a, b, c});
  return hull3(pts);
}
inline LatticePolytope square() { return hull2({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}); }
inline LatticePolytope example() { return counterexample_polytope(); }

/// Hull of n uniform points of [-bound, bound]^3, redrawn until full-dimensional.
inline LatticePolytope small_polytope(std::uint64_t seed, Int bound = 2, int n = 6) {
  GenSpec spec;
  spec.kind = GenKind::general;
  spec.bound = bound;
  spec.n = {n, n};
  spec.seed = seed;
  return random_polytope(spec);
}

/// Random lattice polygon in the plane z = 0 with at least one interior direction.
inline LatticePolytope small_polygon(std::uint64_t seed, Int bound = 3, int n = 5) {
  Rng rng(seed);
  for (;;) {
    std::vector<IntVec> pts;
    for (int i = 0; i < n; ++i) pts.push_back({rng.uniform(-bound, bound), rng.uniform(-bound, bound), 0});
    LatticePolytope p = convex_hull(2, pts);
    if (p.full_dimensional()) return p;
  }
}

inline std::vector<IntVec> pts(const LatticePolytope& p) { return p.vertices(); }

}  // namespace fixtures
