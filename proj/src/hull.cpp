#include <algorithm>
#include <set>
#include <stdexcept>

#include "latsize/core.hpp"

namespace latsize {
namespace {

void validate_input(int dim, std::span<const IntVec> points) {
  if (dim != 2 && dim != 3) throw std::domain_error("convex_hull: dimension must be 2 or 3");
  if (points.empty()) throw std::domain_error("convex_hull: no points");
  for (const IntVec& p : points) {
    for (Int x : p) {
      if (x > kCoordinateLimit || x < -kCoordinateLimit) {
        throw std::domain_error("convex_hull: coordinate exceeds limit " + to_string(p));
      }
    }
    if (dim == 2 && p[2] != 0) {
      throw std::domain_error("convex_hull: planar point with nonzero third coordinate");
    }
  }
}

Wide side(const Halfspace& h, const IntVec& x) { return dot_wide(h.normal, x) - h.offset; }

// Andrew's monotone chain on the coordinate pair (a, b); returns indices of
// the extreme points in counter-clockwise order, collinear points dropped.
std::vector<std::size_t> monotone_chain(const std::vector<IntVec>& pts, std::size_t a,
                                        std::size_t b) {
  std::vector<std::size_t> order(pts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return std::pair(pts[i][a], pts[i][b]) < std::pair(pts[j][a], pts[j][b]);
  });
  auto turn = [&](std::size_t o, std::size_t p, std::size_t q) {
    return (Wide{pts[p][a]} - pts[o][a]) * (Wide{pts[q][b]} - pts[o][b]) -
           (Wide{pts[p][b]} - pts[o][b]) * (Wide{pts[q][a]} - pts[o][a]);
  };
  std::vector<std::size_t> hull(2 * order.size());
  std::size_t k = 0;
  for (std::size_t i : order) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], i) <= 0) --k;
    hull[k++] = i;
  }
  for (std::size_t t = order.size() - 1, lower = k + 1; t-- > 0;) {
    const std::size_t i = order[t];
    while (k >= lower && turn(hull[k - 2], hull[k - 1], i) <= 0) --k;
    hull[k++] = i;
  }
  hull.resize(k - 1);
  return hull;
}

// Orients n so that the reference point lies on the nonpositive side of the
// hyperplane through `on`, and makes it primitive.
Halfspace oriented(IntVec n, const IntVec& on, const IntVec& reference) {
  n = primitive_part(n);
  if (dot_wide(n, reference) > dot_wide(n, on)) n = negate(n);
  return {n, dot(n, on)};
}

}  // namespace

LatticePolytope convex_hull(int dim, std::span<const IntVec> points) {
  validate_input(dim, points);
  std::vector<IntVec> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  LatticePolytope out;
  out.dim_ = dim;

  // Affine rank of the point set.
  const IntVec& base = pts[0];
  IntVec d1 = kZero, d2 = kZero;
  IntVec plane_normal = kZero;
  int rank = 0;
  for (const IntVec& p : pts) {
    const IntVec d = sub(p, base);
    if (rank == 0 && d != kZero) {
      d1 = d;
      rank = 1;
    } else if (rank == 1 && cross(d1, d) != kZero) {
      d2 = d;
      plane_normal = primitive_part(cross(d1, d2));
      rank = 2;
    } else if (rank == 2 && dim == 3 && dot_wide(plane_normal, d) != 0) {
      rank = 3;
      break;
    }
  }
  out.affine_dim_ = rank;

  if (rank == 0) {
    out.vertices_ = {base};
    for (int i = 0; i < dim; ++i) out.equations_.push_back({unit_vector(i), base[static_cast<std::size_t>(i)]});
    return out;
  }

  if (rank == 1) {
    const IntVec dir = primitive_part(d1);
    auto by_dir = [&](const IntVec& x, const IntVec& y) { return dot_wide(dir, x) < dot_wide(dir, y); };
    const IntVec lo = *std::min_element(pts.begin(), pts.end(), by_dir);
    const IntVec hi = *std::max_element(pts.begin(), pts.end(), by_dir);
    out.vertices_ = {std::min(lo, hi), std::max(lo, hi)};
    out.facets_ = {{dir, dot(dir, hi)}, {negate(dir), -dot(dir, lo)}};
    if (dim == 2) {
      const IntVec n{-dir[1], dir[0], 0};
      out.equations_.push_back({n, dot(n, lo)});
    } else {
      std::set<IntVec> seen;
      for (int i = 0; i < 3; ++i) {
        IntVec n = canonical_sign(primitive_part(cross(unit_vector(i), dir)));
        if (n != kZero && seen.insert(n).second) out.equations_.push_back({n, dot(n, lo)});
      }
    }
    std::sort(out.facets_.begin(), out.facets_.end());
    return out;
  }

  if (rank == 2) {
    // Project onto a coordinate plane on which the affine hull projects injectively.
    std::size_t drop = 2;
    IntVec normal = IntVec{0, 0, 1};
    if (dim == 3) {
      normal = plane_normal;
      for (std::size_t i = 0; i < 3; ++i) {
        if (normal[i] != 0) {
          drop = i;
          break;
        }
      }
      out.equations_.push_back({canonical_sign(normal), dot(canonical_sign(normal), base)});
    }
    const std::size_t a = drop == 0 ? 1 : 0;
    const std::size_t b = drop == 2 ? 1 : 2;
    const std::vector<std::size_t> ring = monotone_chain(pts, a, b);
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const IntVec& p = pts[ring[i]];
      const IntVec& q = pts[ring[(i + 1) % ring.size()]];
      const IntVec& r = pts[ring[(i + 2) % ring.size()]];
      out.vertices_.push_back(p);
      out.facets_.push_back(oriented(cross(normal, sub(q, p)), p, r));
    }
    std::sort(out.vertices_.begin(), out.vertices_.end());
    std::sort(out.facets_.begin(), out.facets_.end());
    return out;
  }

  // Full-dimensional in space: every supporting plane through three points.
  std::set<Halfspace> facets;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const IntVec eij = sub(pts[j], pts[i]);
      for (std::size_t k = j + 1; k < n; ++k) {
        IntVec nrm = cross(eij, sub(pts[k], pts[i]));
        if (nrm == kZero) continue;
        nrm = primitive_part(nrm);
        const Wide c = dot_wide(nrm, pts[i]);
        bool pos = false, neg = false;
        for (const IntVec& p : pts) {
          const Wide s = dot_wide(nrm, p) - c;
          pos |= s > 0;
          neg |= s < 0;
          if (pos && neg) break;
        }
        if (pos && neg) continue;
        if (pos) nrm = negate(nrm);
        facets.insert({nrm, dot(nrm, pts[i])});
      }
    }
  }
  out.facets_.assign(facets.begin(), facets.end());

  // A point is a vertex iff the normals of its tight facets span R^3.
  for (const IntVec& p : pts) {
    IntVec f1 = kZero, f2 = kZero;
    int r = 0;
    for (const Halfspace& h : out.facets_) {
      if (side(h, p) != 0) continue;
      if (r == 0) {
        f1 = h.normal;
        r = 1;
      } else if (r == 1 && cross(f1, h.normal) != kZero) {
        f2 = h.normal;
        r = 2;
      } else if (r == 2 && dot_wide(cross(f1, f2), h.normal) != 0) {
        r = 3;
        break;
      }
    }
    if (r == 3) out.vertices_.push_back(p);
  }
  return out;
}

bool LatticePolytope::contains(const IntVec& x) const {
  if (dim_ == 2 && x[2] != 0) return false;
  for (const Halfspace& e : equations_)
    if (dot_wide(e.normal, x) != e.offset) return false;
  for (const Halfspace& f : facets_)
    if (dot_wide(f.normal, x) > f.offset) return false;
  return true;
}

}  // namespace latsize
