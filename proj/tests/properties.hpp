// Randomized invariant checks, shared by the gtest suite and the acceptance binary.
#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "latsize/latticesize.hpp"
#include "oracles.hpp"

namespace properties {

using namespace fixtures;

struct Outcome {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
  void check(bool cond, const std::function<std::string()>& detail) {
    ++cases;
    if (cond) return;
    if (failures++ == 0) first_failure = detail();
  }
};

inline std::string describe(const LatticePolytope& p) {
  std::ostringstream s;
  for (const IntVec& v : p.vertices()) s << to_string(v) << ' ';
  return s.str();
}

/// Mix of small general and width-one polytopes, cheap enough for exact lattice size.
inline LatticePolytope instance(std::uint64_t seed) {
  if (seed % 2 == 0) return small_polytope(seed, 2, 6);
  return generate({.kind = GenKind::width_one, .bound = 3, .n0 = {3, 5}, .n1 = {3, 5}, .seed = seed});
}

inline IntVec random_vec(Rng& rng, Int b) { return {rng.uniform(-b, b), rng.uniform(-b, b), rng.uniform(-b, b)}; }

inline Outcome width_transform(int n, std::uint64_t seed) {
  Outcome out{"width of image equals width in transposed direction"};
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    const LatticePolytope p = small_polytope(seed + static_cast<std::uint64_t>(i), 5, 9);
    const UnimodularMap t = random_unimodular(rng, 5, 6);
    const IntVec h = random_vec(rng, 6);
    const Int lhs = width_in_direction(apply_map(p, t), h);
    const Int rhs = width_in_direction(p, latsize::apply(transpose(t.matrix()), h));
    out.check(lhs == rhs, [&] { return describe(p) + "h=" + to_string(h); });
  }
  return out;
}

inline Outcome width_norm_axioms(int n, std::uint64_t seed) {
  Outcome out{"width norm is homogeneous and subadditive"};
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    const LatticePolytope p = small_polytope(seed + static_cast<std::uint64_t>(i), 5, 9);
    const IntVec g = random_vec(rng, 8), h = random_vec(rng, 8);
    const Int k = rng.uniform(-6, 6);
    const bool homogeneous = width_in_direction(p, scale(k, h)) == (k < 0 ? -k : k) * width_in_direction(p, h);
    const bool triangle = width_in_direction(p, add(g, h)) <= width_in_direction(p, g) + width_in_direction(p, h);
    out.check(homogeneous && triangle, [&] { return describe(p); });
  }
  return out;
}

inline Outcome l1_row_permutation(int n, std::uint64_t seed) {
  Outcome out{"l1(AP) invariant under row permutations of A"};
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    const LatticePolytope p = small_polytope(seed + static_cast<std::uint64_t>(i), 5, 9);
    IntMat a = random_unimodular(rng, 5, 0).matrix();
    const Int base = oracle::l1(oracle::image(p.vertices(), a), 3);
    bool same = true;
    std::ranges::sort(a);
    do same = same && oracle::l1(oracle::image(p.vertices(), a), 3) == base;
    while (std::ranges::next_permutation(a).found);
    out.check(same, [&] { return describe(p) + "A=" + to_string(a); });
  }
  return out;
}

inline Outcome l1_third_row(int n, std::uint64_t seed) {
  Outcome out{"l1(AP) unchanged when h3 is replaced by -(h1+h2+h3)"};
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    const LatticePolytope p = small_polytope(seed + static_cast<std::uint64_t>(i), 5, 9);
    const IntMat a = random_unimodular(rng, 5, 0).matrix();
    const IntMat b{a[0], a[1], negate(add(add(a[0], a[1]), a[2]))};
    out.check(std::abs(det(b)) == 1 && l1(apply_map(p, UnimodularMap::linear(3, a))) ==
                                           l1(apply_map(p, UnimodularMap::linear(3, b))),
              [&] { return describe(p) + "A=" + to_string(a); });
  }
  return out;
}

inline Outcome lower_bound_h3(int n, std::uint64_t seed) {
  Outcome out{"ls >= largest Minkowski norm"};
  for (int i = 0; i < n; ++i) {
    const LatticePolytope p = instance(seed + static_cast<std::uint64_t>(i));
    const Int h3 = minkowski_basis(p).norms[2];
    const Int ls = ls_bruteforce(p).value;
    out.check(ls >= h3, [&] { return describe(p) + "ls=" + std::to_string(ls) + " h3=" + std::to_string(h3); });
  }
  return out;
}

inline Outcome sandwich(int n, std::uint64_t seed) {
  Outcome out{"w <= ls <= nls, every method an upper bound, width-one methods exact where proven"};
  for (int i = 0; i < n; ++i) {
    const LatticePolytope p = instance(seed + static_cast<std::uint64_t>(i));
    const Int w = lattice_width(p).first;
    const Int ls = ls_bruteforce(p).value;
    bool ok = w <= ls && ls <= nls_simplex(p) && ls <= l1(p) && reduced_search(p).value >= ls;
    if (w == 1) {
      const Int slab = ls_width_one(p).value;
      ok = ok && slab >= ls && (!is_empty_polytope(p) || slab == ls);
      if (const auto r = ls_interior_class(p)) ok = ok && r->value == ls;
    }
    for (int k = 0; k < 3; ++k) ok = ok && l1(p) >= width_in_direction(p, unit_vector(k));
    out.check(ok, [&] { return describe(p); });
  }
  return out;
}

inline Outcome agl_invariance(int n, std::uint64_t seed) {
  Outcome out{"ls invariant under affine unimodular maps"};
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    const LatticePolytope p = instance(seed + static_cast<std::uint64_t>(i));
    const LatticePolytope q = apply_map(p, random_unimodular(rng, 3, 5));
    const Int a = ls_bruteforce(p).value, b = ls_bruteforce(q).value;
    out.check(a == b, [&] { return describe(p) + "-> " + describe(q); });
  }
  return out;
}

inline Outcome pruning_sound(int n, std::uint64_t seed) {
  Outcome out{"pruned and unpruned brute force agree"};
  for (int i = 0; i < n; ++i) {
    const LatticePolytope p = instance(seed + static_cast<std::uint64_t>(i));
    const LatticeSizeResult a = ls_bruteforce(p, {.prune = true});
    const LatticeSizeResult b = ls_bruteforce(p, {.prune = false});
    out.check(a.value == b.value && a.witness == b.witness, [&] { return describe(p); });
  }
  return out;
}

inline Outcome enumeration_exhaustive(int n, std::uint64_t seed) {
  Outcome out{"short-direction enumeration matches a wider independent box"};
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    const LatticePolytope p = instance(seed + static_cast<std::uint64_t>(i));
    const Int l = rng.uniform(1, nls_simplex(p) + 1);
    std::set<IntVec> got;
    for (const Direction& d : enumerate_short_directions(p, l).directions) got.insert(d.vec());
    const auto ref = oracle::short_directions(p.vertices(), 3, l, false);
    out.check(got == std::set<IntVec>(ref.begin(), ref.end()),
              [&] { return describe(p) + "l=" + std::to_string(l); });
  }
  return out;
}

inline Outcome lattice_points_transform(int n, std::uint64_t seed) {
  Outcome out{"lattice points commute with unimodular maps"};
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    const LatticePolytope p = small_polytope(seed + static_cast<std::uint64_t>(i), 3, 7);
    const UnimodularMap t = random_unimodular(rng, 3, 4);
    auto mapped = transform(lattice_points(p), t);
    std::ranges::sort(mapped);
    out.check(mapped == lattice_points(apply_map(p, t)), [&] { return describe(p); });
  }
  return out;
}

inline Outcome planar_embedding(int n, std::uint64_t seed) {
  Outcome out{"planar lattice size equals lattice size of the polygon in space"};
  for (int i = 0; i < n; ++i) {
    const LatticePolytope p = small_polygon(seed + static_cast<std::uint64_t>(i), 3, 5);
    const Int planar = ls_delta_2d(p).value;
    out.check(planar == oracle::ls_embedded(p.vertices()) && planar == oracle::ls2d(p.vertices()),
              [&] { return describe(p); });
  }
  return out;
}

/// The full suite; `cases` applies to every check except the planar one, which uses 10 polygons.
inline std::vector<Outcome> all(int cases, std::uint64_t seed) {
  return {width_transform(cases, seed),       width_norm_axioms(cases, seed + 1),
          l1_row_permutation(cases, seed + 2), l1_third_row(cases, seed + 3),
          lower_bound_h3(cases, seed + 4),     sandwich(cases, seed + 5),
          agl_invariance(cases, seed + 6),     pruning_sound(cases, seed + 7),
          enumeration_exhaustive(cases, seed + 8), lattice_points_transform(cases, seed + 9),
          planar_embedding(10, seed + 10)};
}

}  // namespace properties
