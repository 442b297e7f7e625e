// Basis reduction with respect to the width norm ||h|| = w_h(P).
//
// gauss_reduce_2d is the generalized Gauss reduction of a planar basis;
// reduce_basis_3d iterates single-row improvements to a fixed point at
// which the basis is reduced (norms sorted, ||h1 +- h2|| >= ||h2||, and
// ||m h1 + n h2 + h3|| >= ||h3|| for all integers m, n). minkowski_upgrade
// then turns a reduced basis into a Minkowski reduced one.
//
// Whenever several vectors tie on norm, the one with smaller Euclidean
// length wins, then the lexicographically smaller canonical form.

#pragma once

#include <functional>
#include <string>
#include <utility>

#include "latsize/core.hpp"

namespace latsize {

enum class ReductionLevel { none, reduced, minkowski };

std::string to_string(ReductionLevel level);
ReductionLevel reduction_level_from_string(const std::string& s);

struct Basis {
  int dim = 3;
  /// Rows h_1..h_dim; unused rows of a planar basis hold the identity.
  IntMat rows = identity_matrix();
  std::array<Int, 3> norms{};
  ReductionLevel level = ReductionLevel::none;

  const IntVec& operator[](std::size_t i) const { return rows[i]; }
  /// The unimodular map whose rows are the basis vectors.
  UnimodularMap as_map() const { return UnimodularMap::linear(dim, rows); }
};

/// Builds a basis bound to p, computing the norms. Throws std::domain_error if det != +-1.
Basis make_basis(const LatticePolytope& p, const IntMat& rows, ReductionLevel level = ReductionLevel::none);

/// Integer m minimizing ||h2 + m h1||, tie-broken as described above.
/// If ||h1|| = 0 the norm is constant in m and the Euclidean length decides.
Int best_multiple(WidthNorm& norm, const IntVec& h1, const IntVec& h2);

/// Planar generalized Gauss reduction. Throws std::domain_error for a single point.
Basis gauss_reduce_2d(const LatticePolytope& p, const Basis& start);

struct PlaneMinimum {
  Int m = 0;
  Int n = 0;
  IntVec vector{};
  Int norm = 0;
};

/// Calls visit(m, n, v, ||v||) for every integer (m, n) with
/// v = m h1 + n h2 + h3 and ||v|| <= bound. Requires a full-dimensional p,
/// independent h1, h2, and bound >= ||h3||; the scan walks outward from
/// m = 0 over the convex region of feasible (m, n), so it is exhaustive.
void for_each_plane_vector(const LatticePolytope& p, const IntVec& h1, const IntVec& h2,
                           const IntVec& h3, Int bound,
                           const std::function<void(Int, Int, const IntVec&, Int)>& visit);

/// Integer (m, n) minimizing ||m h1 + n h2 + h3||.
PlaneMinimum minimize_over_plane(const LatticePolytope& p, const IntVec& h1, const IntVec& h2,
                                 const IntVec& h3);

/// Reduced basis of Z^3 with respect to a full-dimensional p.
Basis reduce_basis_3d(const LatticePolytope& p);

/// Checks all three reduction conditions, recomputing norms from scratch.
bool is_reduced(const LatticePolytope& p, const Basis& b);

/// Minkowski reduced basis obtained from a reduced one. Throws std::domain_error if b is not reduced.
Basis minkowski_upgrade(const LatticePolytope& p, const Basis& b);

/// Minkowski reduced basis of a full-dimensional polytope in space.
Basis minkowski_basis(const LatticePolytope& p);

/// Lattice width and a direction attaining it. Lower-dimensional
/// polytopes have width 0 along a normal of their affine hull.
std::pair<Int, Direction> lattice_width(const LatticePolytope& p);

}  // namespace latsize
