// Seeded instance generators.
//
// Randomness comes from std::mt19937_64, whose output sequence is fixed by
// the C++ standard. Bounded integers are drawn by rejection sampling, so
// a GenSpec produces the same polytope with any conforming standard library.
// Experiment trial k of a run seeded with s uses the seed trial_seed(s, k),
// which depends on nothing else, so every trial replays on its own.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>

#include "latsize/core.hpp"

namespace latsize {

enum class GenKind { white, width_one, general, parallelepiped, interior };

std::string to_string(GenKind kind);
GenKind gen_kind_from_string(const std::string& s);

struct CountRange {
  int lo = 1;
  int hi = 1;
  friend bool operator==(const CountRange&, const CountRange&) = default;
};

struct GenSpec {
  GenKind kind = GenKind::general;
  /// Coordinate bound; for white and parallelepiped, the bound on p, q and a, b, c, d.
  Int bound = 7;
  /// Point counts of the layers x = 0 and x = 1 (width_one).
  CountRange n0{5, 8};
  CountRange n1{5, 8};
  /// Point count (general).
  CountRange n{10, 15};
  std::uint64_t seed = 0;
  friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

/// Throws std::domain_error on a bound below 1 or an empty count range.
void validate(const GenSpec& spec);

/// splitmix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed for trial `index` of a run seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  /// Uniform integer in [lo, hi].
  Int uniform(Int lo, Int hi);

 private:
  std::mt19937_64 engine_;
};

/// Draws that fail a generator's validity test are repeated at most this often.
inline constexpr int kMaxRedraws = 100;

/// conv{e1, e2, e3, (p, q, 1)}. Throws std::domain_error unless p, q >= 0 and gcd(p, q) = 1.
LatticePolytope white_tetrahedron(Int p, Int q);

/// Unit square at x = 0 over the parallelogram spanned by (a, b), (c, d) at x = 1.
/// Throws std::domain_error unless ad - bc = +-1.
LatticePolytope empty_parallelepiped(Int a, Int b, Int c, Int d);

/// Random coprime (p, q) in [0, bound]^2.
std::pair<Int, Int> random_white_parameters(const GenSpec& spec);

/// Random (a, b, c, d) in [1, bound]^4 with ad - bc = +-1.
std::array<Int, 4> random_parallelepiped_parameters(const GenSpec& spec);

/// conv(P0 u P1) with P0 in x = 0, P1 in x = 1, |y|, |z| <= bound.
LatticePolytope random_width_one(const GenSpec& spec);

/// Hull of n uniform points of [-bound, bound]^3, full-dimensional.
LatticePolytope random_polytope(const GenSpec& spec);

/// Width-one polytope whose upper layer is a translate of a polygon spanned
/// by interior lattice points of the lower layer, moved by a random unimodular map.
LatticePolytope random_interior_class(const GenSpec& spec);

/// Dispatches on spec.kind.
LatticePolytope generate(const GenSpec& spec);

/// Product of `steps` random elementary matrices and sign flips, with a random translation.
UnimodularMap random_unimodular(Rng& rng, int steps, Int translation_bound);

}  // namespace latsize
