// Exact lattice polytope model: hull, facets, lattice points and the width
// and l1 functionals that the reduction and lattice-size code build on.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latsize/arith.hpp"

namespace latsize {

using Rational = boost::multiprecision::cpp_rational;

/// A nonzero primitive integer direction with canonical sign.
class Direction {
 public:
  /// Throws std::domain_error unless h is nonzero and primitive. The sign is canonicalized.
  explicit Direction(const IntVec& h);

  const IntVec& vec() const { return h_; }

  friend bool operator==(const Direction&, const Direction&) = default;
  friend auto operator<=>(const Direction&, const Direction&) = default;

 private:
  IntVec h_;
};

/// An affine unimodular map x -> A x + v in dimension 2 or 3.
///
/// Planar maps are stored as block-diagonal 3x3 matrices whose last row and
/// column are those of the identity, with v[2] = 0.
class UnimodularMap {
 public:
  UnimodularMap() = default;
  /// Throws std::domain_error if det A != +-1 or the planar block structure is violated.
  UnimodularMap(int dim, const IntMat& a, const IntVec& v);

  static UnimodularMap identity(int dim);
  static UnimodularMap translation(int dim, const IntVec& v);
  static UnimodularMap linear(int dim, const IntMat& a);

  int dim() const { return dim_; }
  const IntMat& matrix() const { return a_; }
  const IntVec& shift() const { return v_; }

  IntVec operator()(const IntVec& x) const;
  /// Returns the map x -> next(this(x)).
  UnimodularMap then(const UnimodularMap& next) const;

  friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;
  /// Lexicographic on (A, v); used for deterministic witness selection.
  friend auto operator<=>(const UnimodularMap& x, const UnimodularMap& y) {
    if (auto c = x.a_ <=> y.a_; c != 0) return c;
    return x.v_ <=> y.v_;
  }

 private:
  int dim_ = 3;
  IntMat a_ = identity_matrix();
  IntVec v_ = kZero;
};

/// Inequality <normal, x> <= offset.
struct Halfspace {
  IntVec normal;
  Int offset;
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
  friend auto operator<=>(const Halfspace&, const Halfspace&) = default;
};

/// Convex hull of finitely many lattice points in Z^2 or Z^3.
///
/// The point set is {x : <a, x> = b for each equation, <n, x> <= c for each
/// facet}. Full-dimensional polytopes have no equations. Lower-dimensional
/// ones (points, segments, polygons in space) carry equations for their
/// affine hull and facets relative to it.
class LatticePolytope {
 public:
  int dim() const { return dim_; }
  int affine_dim() const { return affine_dim_; }
  bool full_dimensional() const { return affine_dim_ == dim_; }

  /// Extreme points, sorted lexicographically.
  const std::vector<IntVec>& vertices() const { return vertices_; }
  const std::vector<Halfspace>& facets() const { return facets_; }
  /// Equations <normal, x> = offset of the affine hull (empty when full-dimensional).
  const std::vector<Halfspace>& equations() const { return equations_; }

  bool contains(const IntVec& x) const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

 private:
  friend LatticePolytope convex_hull(int dim, std::span<const IntVec> points);

  int dim_ = 3;
  int affine_dim_ = 0;
  std::vector<IntVec> vertices_;
  std::vector<Halfspace> facets_;
  std::vector<Halfspace> equations_;
};

/// Exact convex hull. Degenerate inputs yield a lower-dimensional polytope
/// (see affine_dim()). Throws std::domain_error on empty input, dim not in
/// {2,3}, nonzero third coordinate in the planar case, or coordinates beyond
/// kCoordinateLimit.
LatticePolytope convex_hull(int dim, std::span<const IntVec> points);

/// max <h,x> - min <h,x> over the vertices.
Int width_in_direction(const LatticePolytope& p, const IntVec& h);
Int width_in_direction(std::span<const IntVec> points, const IntVec& h);

/// max (x_1+...+x_d) - min x_1 - ... - min x_d.
Int l1(const LatticePolytope& p);
Int l1(std::span<const IntVec> points, int dim);

/// l1 of the image of p under the diagonal sign matrix diag(signs).
Int corner_l(const LatticePolytope& p, std::span<const int> signs);

/// Minimum of corner_l over all 2^d sign vectors.
Int nls_simplex(const LatticePolytope& p);

/// The sign-diagonal map plus translation realizing nls_simplex, with the
/// image translated so every coordinate minimum is zero. Ties go to the first
/// sign vector in the order (+,+,+), (-,+,+), (+,-,+), ...
std::pair<Int, UnimodularMap> naive_fit(const LatticePolytope& p);

/// Largest coordinate width.
Int nls_cube(const LatticePolytope& p);

/// Image of p under t, re-hulled. Throws std::domain_error on dimension mismatch.
LatticePolytope apply_map(const LatticePolytope& p, const UnimodularMap& t);

std::vector<IntVec> transform(std::span<const IntVec> points, const UnimodularMap& t);

/// Translation making every coordinate minimum of the points zero.
IntVec min_corner_shift(std::span<const IntVec> points, int dim);

/// All lattice points of p (boundary included), sorted lexicographically.
std::vector<IntVec> lattice_points(const LatticePolytope& p);

bool is_empty_polytope(const LatticePolytope& p);

struct InscribedBall {
  std::array<Rational, 3> center;
  Rational radius_sq;
};

/// Ball about the vertex centroid touching the nearest facet.
/// Throws std::domain_error when p is not full-dimensional.
InscribedBall inradius_bound(const LatticePolytope& p);

/// Memoized width norm h -> w_h(P) keyed by canonical direction.
///
/// Not synchronized: confine each instance to one thread.
class WidthNorm {
 public:
  explicit WidthNorm(const LatticePolytope& p) : p_(&p) {}

  Int operator()(const IntVec& h);
  const LatticePolytope& polytope() const { return *p_; }
  std::size_t cache_size() const { return memo_.size(); }

 private:
  const LatticePolytope* p_;
  std::unordered_map<IntVec, Int, IntVecHash> memo_;
};

}  // namespace latsize
