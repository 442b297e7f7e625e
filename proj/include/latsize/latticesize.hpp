// Lattice size with respect to the standard simplex,
//   ls(P) = min { l1(T(P)) : T affine unimodular },
// computed by several routes:
//
//   ls_bruteforce     exhaustive search over unimodular matrices whose rows
//                     are short directions (inscribed-ball bound, pruned);
//   ls_width_one      layer-shifting algorithm for width-one polytopes,
//                     exact on empty ones;
//   reduced_search    minimum over reduced bases of a fixed shape, an upper
//                     bound that is not always tight;
//   ls_interior_class width-one polytopes whose upper layer fits inside the
//                     interior hull of the lower one;
//   ls_delta_2d       planar lattice size via Gauss reduction.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latsize/core.hpp"
#include "latsize/reduction.hpp"

namespace latsize {

enum class Method { brute, slab, reduced_search, interior_class, two_d };

std::string to_string(Method m);

struct LatticeSizeResult {
  Int value = 0;
  /// l1(witness(P)) == value, with the image's coordinate minima at zero.
  UnimodularMap witness;
  Method method = Method::brute;
};

struct CandidateSet {
  /// Canonical primitive h with w_h(P) < bound_l, sorted by (width, |h|^2, h).
  std::vector<Direction> directions;
  std::vector<Int> widths;
  Int bound_l = 0;
};

/// Every canonical primitive h with w_h(P) < l. Throws std::domain_error
/// unless p is full-dimensional in space and l >= 1.
CandidateSet enumerate_short_directions(const LatticePolytope& p, Int l);

struct BruteForceOptions {
  /// Width and partial-sum pruning against the running best.
  bool prune = true;
  /// Reduce the standard basis first and search in reduced coordinates.
  bool reduce_first = false;
  /// Workers splitting the search by first row; the result does not depend on it.
  unsigned threads = 1;
};

/// The witness is the naive sign-diagonal fit unless some matrix does strictly
/// better; among better matrices the lexicographically smallest row-sorted one wins.
LatticeSizeResult ls_bruteforce(const LatticePolytope& p, const BruteForceOptions& options = {});

struct SlabForm {
  LatticePolytope polytope;
  UnimodularMap map;
};

/// Maps a width-one polytope into 0 <= x <= 1 using its Minkowski reduced
/// basis as the linear part, translated so every coordinate minimum is 0.
SlabForm normalize_to_slab(const LatticePolytope& p);

/// Layer-shifting algorithm on the Minkowski reduced coordinates. Exact
/// for empty polytopes; an upper bound for other width-one polytopes.
LatticeSizeResult ls_width_one(const LatticePolytope& p);

/// Minimum of l1 over reduced bases (+-e1, a e1 +- e2, b e1 + c e2 +- e3)
/// in reduced coordinates. An upper bound on ls.
LatticeSizeResult reduced_search(const LatticePolytope& p);

/// Planar lattice size. Segments and points are handled.
LatticeSizeResult ls_delta_2d(const LatticePolytope& p);

/// Value for width-one polytopes whose upper layer, up to a lattice
/// translation, lies in the convex hull of the interior lattice points of
/// the lower layer; std::nullopt when that hypothesis is not detected.
std::optional<LatticeSizeResult> ls_interior_class(const LatticePolytope& p);

/// Lattice size with respect to the unit cube: the largest norm of a reduced basis.
Int ls_cube_via_reduction(const LatticePolytope& p);

/// Chooses a method: planar input uses ls_delta_2d; width-one empty
/// polytopes use ls_width_one; width-one polytopes satisfying the interior
/// hypothesis use ls_interior_class; everything else runs reduction-first
/// brute force.
LatticeSizeResult lattice_size_auto(const LatticePolytope& p, unsigned threads = 1);

}  // namespace latsize
