#include "latsize/latticesize.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace latsize {
namespace {

void require_solid(const LatticePolytope& p, const char* who) {
  if (p.dim() != 3 || !p.full_dimensional()) {
    throw std::domain_error(std::string(who) + ": polytope must be full-dimensional in space");
  }
}

// Tracks the smallest (value, map) pair.
struct BestMap {
  Int value = std::numeric_limits<Int>::max();
  UnimodularMap map;
  bool empty = true;

  void offer(Int v, const UnimodularMap& m) {
    if (empty || v < value || (v == value && m < map)) {
      value = v;
      map = m;
      empty = false;
    }
  }
};

UnimodularMap to_min_corner(const LatticePolytope& p, const UnimodularMap& m) {
  return m.then(UnimodularMap::translation(p.dim(), min_corner_shift(transform(p.vertices(), m), p.dim())));
}

// Linear part = Minkowski reduced basis (first row of width one), then translated to the min corner.
UnimodularMap slab_map(const LatticePolytope& p, const Basis& b) {
  if (b.norms[0] != 1) {
    throw std::domain_error("normalize_to_slab: lattice width is " + std::to_string(b.norms[0]) + ", not 1");
  }
  return to_min_corner(p, b.as_map());
}

UnimodularMap slab_map(const LatticePolytope& p) {
  require_solid(p, "normalize_to_slab");
  return slab_map(p, minkowski_basis(p));
}

IntMat shear(Int a, Int b) { return {IntVec{1, 0, 0}, IntVec{a, 1, 0}, IntVec{b, 0, 1}}; }

struct LayerBox {
  Int min_y = std::numeric_limits<Int>::max();
  Int min_z = std::numeric_limits<Int>::max();
};

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::brute: return "brute";
    case Method::slab: return "slab";
    case Method::reduced_search: return "reduced_search";
    case Method::interior_class: return "interior_class";
    case Method::two_d: return "two_d";
  }
  return "brute";
}

SlabForm normalize_to_slab(const LatticePolytope& p) {
  const UnimodularMap m = slab_map(p);
  return {apply_map(p, m), m};
}

LatticeSizeResult ls_width_one(const LatticePolytope& p) {
  require_solid(p, "ls_width_one");
  const Basis basis = minkowski_basis(p);
  const UnimodularMap slab = slab_map(p, basis);
  // All Minkowski norms equal to 1: p sits in a unit cube, where layer shifting is not exact.
  if (basis.norms[2] == 1) {
    const LatticeSizeResult r = ls_bruteforce(p);
    return {r.value, r.witness, Method::slab};
  }
  const std::vector<IntVec> layered = transform(p.vertices(), slab);

  BestMap best;
  std::vector<IntVec> pts(layered.size());
  for (unsigned mask = 0; mask < 8; ++mask) {
    const IntVec sign{mask & 1u ? -1 : 1, mask & 2u ? -1 : 1, mask & 4u ? -1 : 1};
    // A reflected x layer moves back to 0 <= x <= 1.
    const Int lift = sign[0] < 0 ? 1 : 0;
    std::array<LayerBox, 2> layer;
    for (std::size_t i = 0; i < layered.size(); ++i) {
      pts[i] = {sign[0] * layered[i][0] + lift, sign[1] * layered[i][1], sign[2] * layered[i][2]};
      LayerBox& b = layer[static_cast<std::size_t>(pts[i][0])];
      b.min_y = std::min(b.min_y, pts[i][1]);
      b.min_z = std::min(b.min_z, pts[i][2]);
    }
    // Each layer moved to its own corner; the image is already at the min corner.
    Int top = 0;
    for (const IntVec& x : pts) {
      const LayerBox& b = layer[static_cast<std::size_t>(x[0])];
      top = std::max(top, x[0] + (x[1] - b.min_y) + (x[2] - b.min_z));
    }
    if (!best.empty && top > best.value) continue;

    // Layer 0 goes to the corner by translation, layer 1 by a shear.
    const UnimodularMap total =
        slab.then(UnimodularMap(3, {IntVec{sign[0], 0, 0}, IntVec{0, sign[1], 0}, IntVec{0, 0, sign[2]}},
                                IntVec{lift, -layer[0].min_y, -layer[0].min_z}))
            .then(UnimodularMap::linear(3, shear(layer[0].min_y - layer[1].min_y, layer[0].min_z - layer[1].min_z)));
    best.offer(top, total);
  }
  return {best.value, best.map, Method::slab};
}

LatticeSizeResult reduced_search(const LatticePolytope& p) {
  require_solid(p, "reduced_search");
  const UnimodularMap reduce = reduce_basis_3d(p).as_map();
  const LatticePolytope q = apply_map(p, reduce);
  const IntVec e1 = unit_vector(0), e2 = unit_vector(1), e3 = unit_vector(2);
  const Int n1 = width_in_direction(q, e1);
  const Int n2 = width_in_direction(q, e2);
  const Int n3 = width_in_direction(q, e3);

  // Reduced second rows a e1 + e2 have norm n2; scan the convex window of norm <= n1 + n2.
  std::vector<Int> shifts;
  for (Int a = 0; width_in_direction(q, axpy(a, e1, e2)) <= n1 + n2; ++a) shifts.push_back(a);
  for (Int a = -1; width_in_direction(q, axpy(a, e1, e2)) <= n1 + n2; --a) shifts.push_back(a);

  // Reduced third rows b e1 + c e2 + e3 have norm n3.
  std::vector<std::pair<Int, Int>> lifts;
  for_each_plane_vector(q, e1, e2, e3, n3, [&](Int b, Int c, const IntVec&, Int) { lifts.emplace_back(b, c); });

  BestMap best;
  for (Int s1 : {1, -1}) {
    for (Int s2 : {1, -1}) {
      for (Int s3 : {1, -1}) {
        for (Int a : shifts) {
          for (const auto& [b, c] : lifts) {
            // ||a e1 - e2|| = ||-a e1 + e2||, so the sign folds into the coefficients.
            const IntMat rows{IntVec{s1, 0, 0}, IntVec{s2 * a, s2, 0}, IntVec{s3 * b, s3 * c, s3}};
            if (!is_reduced(q, make_basis(q, rows))) continue;
            const UnimodularMap m = to_min_corner(q, UnimodularMap::linear(3, rows));
            best.offer(l1(transform(q.vertices(), m), 3), reduce.then(m));
          }
        }
      }
    }
  }
  if (best.empty) throw std::logic_error("reduced_search: no reduced basis found");
  return {best.value, best.map, Method::reduced_search};
}

LatticeSizeResult ls_delta_2d(const LatticePolytope& p) {
  if (p.dim() != 2) throw std::domain_error("ls_delta_2d: polytope must be planar");
  if (p.affine_dim() == 0) {
    return {0, UnimodularMap::translation(2, negate(p.vertices().front())), Method::two_d};
  }
  const Basis b = gauss_reduce_2d(p, make_basis(p, identity_matrix()));
  const UnimodularMap reduce = b.as_map();
  const auto [value, fit] = naive_fit(apply_map(p, reduce));
  return {value, reduce.then(fit), Method::two_d};
}

std::optional<LatticeSizeResult> ls_interior_class(const LatticePolytope& p) {
  require_solid(p, "ls_interior_class");
  if (const Int w = lattice_width(p).first; w != 1) {
    throw std::domain_error("ls_interior_class: lattice width is " + std::to_string(w) + ", not 1");
  }
  const UnimodularMap slab = width_in_direction(p, unit_vector(0)) == 1
                                 ? to_min_corner(p, UnimodularMap::identity(3))
                                 : slab_map(p);
  const std::vector<IntVec> layered = transform(p.vertices(), slab);

  for (bool flip : {false, true}) {
    const UnimodularMap reflect =
        flip ? UnimodularMap(3, {IntVec{-1, 0, 0}, IntVec{0, 1, 0}, IntVec{0, 0, 1}}, IntVec{1, 0, 0})
             : UnimodularMap::identity(3);
    std::vector<IntVec> lower, upper;
    for (const IntVec& x : transform(layered, reflect)) (x[0] == 0 ? lower : upper).push_back({x[1], x[2], 0});

    const LatticePolytope base = convex_hull(2, lower);
    if (!base.full_dimensional()) continue;
    std::vector<IntVec> interior;
    for (const IntVec& x : lattice_points(base)) {
      const bool strict = std::all_of(base.facets().begin(), base.facets().end(),
                                      [&](const Halfspace& f) { return dot(f.normal, x) < f.offset; });
      if (strict) interior.push_back(x);
    }
    if (interior.empty()) continue;
    const LatticePolytope core = convex_hull(2, interior);

    // Translations keeping the bounding box of the upper layer inside that of the interior hull.
    IntVec core_lo = core.vertices().front(), core_hi = core_lo;
    for (const IntVec& x : core.vertices())
      for (std::size_t i = 0; i < 2; ++i) {
        core_lo[i] = std::min(core_lo[i], x[i]);
        core_hi[i] = std::max(core_hi[i], x[i]);
      }
    IntVec up_lo = upper.front(), up_hi = up_lo;
    for (const IntVec& x : upper)
      for (std::size_t i = 0; i < 2; ++i) {
        up_lo[i] = std::min(up_lo[i], x[i]);
        up_hi[i] = std::max(up_hi[i], x[i]);
      }
    for (Int ty = core_lo[0] - up_lo[0]; ty <= core_hi[0] - up_hi[0]; ++ty) {
      for (Int tz = core_lo[1] - up_lo[1]; tz <= core_hi[1] - up_hi[1]; ++tz) {
        const bool fits = std::all_of(upper.begin(), upper.end(), [&](const IntVec& x) {
          return core.contains({x[0] + ty, x[1] + tz, 0});
        });
        if (!fits) continue;

        const LatticeSizeResult planar = ls_delta_2d(base);
        const IntMat& a2 = planar.witness.matrix();
        const IntVec& v2 = planar.witness.shift();
        const UnimodularMap lift(3, {IntVec{1, 0, 0}, IntVec{0, a2[0][0], a2[0][1]}, IntVec{0, a2[1][0], a2[1][1]}},
                                 IntVec{0, v2[0], v2[1]});
        const UnimodularMap total =
            slab.then(reflect).then(UnimodularMap::linear(3, shear(ty, tz))).then(lift);
        if (l1(transform(p.vertices(), total), 3) != planar.value) {
          throw std::logic_error("ls_interior_class: assembled witness does not attain the planar value");
        }
        return LatticeSizeResult{planar.value, total, Method::interior_class};
      }
    }
  }
  return std::nullopt;
}

Int ls_cube_via_reduction(const LatticePolytope& p) { return reduce_basis_3d(p).norms[2]; }

LatticeSizeResult lattice_size_auto(const LatticePolytope& p, unsigned threads) {
  if (p.dim() == 2) return ls_delta_2d(p);
  require_solid(p, "lattice_size_auto");
  if (lattice_width(p).first == 1) {
    if (is_empty_polytope(p)) return ls_width_one(p);
    if (auto r = ls_interior_class(p)) return *r;
  }
  return ls_bruteforce(p, {.prune = true, .reduce_first = true, .threads = threads});
}

}  // namespace latsize
