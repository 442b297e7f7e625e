#include "latsize/reduction.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace latsize {
namespace {

// Selection order among vectors: width norm, then Euclidean length, then canonical form.
using SelectionKey = std::tuple<Int, Int, IntVec>;

SelectionKey selection_key(Int norm, const IntVec& v) { return {norm, euclid_sq(v), canonical_sign(v)}; }

// Smallest integer m with pred(m), for pred monotone false -> true.
template <class Pred>
Int first_true(Pred pred) {
  Int lo = 0, hi = 0;
  if (pred(0)) {
    Int step = 1;
    lo = -1;
    while (pred(lo)) {
      hi = lo;
      step *= 2;
      lo = -step;
    }
  } else {
    Int step = 1;
    hi = 1;
    while (!pred(hi)) {
      lo = hi;
      step *= 2;
      hi = step;
    }
  }
  while (hi - lo > 1) {
    const Int mid = lo + (hi - lo) / 2;
    if (pred(mid)) hi = mid;
    else lo = mid;
  }
  return hi;
}

// Positive-denominator fraction compared exactly.
struct Fraction {
  Wide num;
  Wide den;
};

bool less(const Fraction& a, const Fraction& b) { return a.num * b.den < b.num * a.den; }

bool fits(Wide x) { return x >= std::numeric_limits<Int>::min() && x <= std::numeric_limits<Int>::max(); }

Int floor_frac(const Fraction& f) {
  if (fits(f.num) && fits(f.den)) return floor_div(static_cast<Int>(f.num), static_cast<Int>(f.den));
  Wide q = f.num / f.den;
  if (f.num % f.den != 0 && f.num < 0) --q;
  return narrow(q);
}

Int ceil_frac(const Fraction& f) {
  if (fits(f.num) && fits(f.den)) return ceil_div(static_cast<Int>(f.num), static_cast<Int>(f.den));
  Wide q = f.num / f.den;
  if (f.num % f.den != 0 && f.num > 0) ++q;
  return narrow(q);
}

std::vector<IntVec> vertex_differences(const LatticePolytope& p) {
  std::vector<IntVec> diffs;
  const auto& v = p.vertices();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (i != j) diffs.push_back(sub(v[i], v[j]));
  std::sort(diffs.begin(), diffs.end());
  diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
  return diffs;
}

constexpr int kIterationCap = 100000;

}  // namespace

std::string to_string(ReductionLevel level) {
  switch (level) {
    case ReductionLevel::none: return "none";
    case ReductionLevel::reduced: return "reduced";
    case ReductionLevel::minkowski: return "minkowski";
  }
  return "none";
}

ReductionLevel reduction_level_from_string(const std::string& s) {
  if (s == "none") return ReductionLevel::none;
  if (s == "reduced") return ReductionLevel::reduced;
  if (s == "minkowski") return ReductionLevel::minkowski;
  throw std::domain_error("unknown reduction level '" + s + "'");
}

Basis make_basis(const LatticePolytope& p, const IntMat& rows, ReductionLevel level) {
  Basis b;
  b.dim = p.dim();
  b.rows = rows;
  b.level = level;
  (void)b.as_map();  // validates det and planar structure
  for (int i = 0; i < b.dim; ++i) {
    const auto k = static_cast<std::size_t>(i);
    b.norms[k] = width_in_direction(p, rows[k]);
  }
  return b;
}

Int best_multiple(WidthNorm& norm, const IntVec& h1, const IntVec& h2) {
  if (h1 == kZero) throw std::domain_error("best_multiple: zero vector");
  Int lo = std::numeric_limits<Int>::min() / 4;
  Int hi = std::numeric_limits<Int>::max() / 4;
  if (norm(h1) != 0) {
    // m -> ||h2 + m h1|| is convex; its forward difference is nondecreasing.
    auto f = [&](Int m) { return norm(axpy(m, h1, h2)); };
    lo = first_true([&](Int m) { return f(m + 1) - f(m) >= 0; });
    hi = first_true([&](Int m) { return f(m + 1) - f(m) > 0; });
  }
  // Euclidean length is a convex quadratic in m; test the two integers around its real minimizer.
  const Int target_num = -dot(h1, h2);
  const Int target_den = euclid_sq(h1);
  const Int below = std::clamp(floor_div(target_num, target_den), lo, hi);
  const Int above = std::clamp(ceil_div(target_num, target_den), lo, hi);
  const IntVec vb = axpy(below, h1, h2);
  const IntVec va = axpy(above, h1, h2);
  return selection_key(norm(vb), vb) <= selection_key(norm(va), va) ? below : above;
}

Basis gauss_reduce_2d(const LatticePolytope& p, const Basis& start) {
  if (p.dim() != 2) throw std::domain_error("gauss_reduce_2d: polytope must be planar");
  if (p.affine_dim() == 0) throw std::domain_error("gauss_reduce_2d: polytope is a single point");
  WidthNorm norm(p);
  IntVec h1 = start.rows[0];
  IntVec h2 = start.rows[1];
  if (norm(h2) < norm(h1)) std::swap(h1, h2);
  for (int iter = 0; iter < kIterationCap; ++iter) {
    const Int m = best_multiple(norm, h1, h2);
    if (m != 0) h2 = axpy(m, h1, h2);
    if (norm(h2) < norm(h1)) {
      std::swap(h1, h2);
      continue;
    }
    if (m == 0) return make_basis(p, {h1, h2, unit_vector(2)}, ReductionLevel::reduced);
  }
  throw std::logic_error("gauss_reduce_2d: iteration cap reached");
}

namespace {

// Integer points (m, n) with ||m h1 + n h2 + h3|| <= bound, slice by slice in m outward from 0.
// The visitor may lower bound; later slices use the smaller value.
template <class Visit>
void scan_plane(const LatticePolytope& p, const IntVec& h1, const IntVec& h2, const IntVec& h3, Int& bound,
                Visit&& visit) {
  struct Coeffs {
    Int along_m, along_n, base;
  };
  std::vector<Coeffs> rows;
  for (const IntVec& d : vertex_differences(p)) rows.push_back({dot(h1, d), dot(h2, d), dot(h3, d)});
  std::vector<Coeffs> dots;
  for (const IntVec& x : p.vertices()) dots.push_back({dot(h1, x), dot(h2, x), dot(h3, x)});

  // False once the real slice at m is empty.
  auto slice = [&](Int m) {
    Fraction lo{0, 1}, hi{0, 1};
    bool has_lo = false, has_hi = false;
    for (const Coeffs& r : rows) {
      const Wide rhs = Wide{bound} - r.base - Wide{m} * r.along_m;
      if (r.along_n == 0) {
        if (rhs < 0) return false;
      } else if (r.along_n > 0) {
        const Fraction f{rhs, r.along_n};
        if (!has_hi || less(f, hi)) hi = f;
        has_hi = true;
      } else {
        const Fraction f{-rhs, -Wide{r.along_n}};
        if (!has_lo || less(lo, f)) lo = f;
        has_lo = true;
      }
    }
    if (!has_lo || !has_hi) throw std::logic_error("plane scan: unbounded slice");
    if (less(hi, lo)) return false;
    const IntVec base = axpy(m, h1, h3);
    for (Int n = ceil_frac(lo), last = floor_frac(hi); n <= last; ++n) {
      Wide top = std::numeric_limits<Wide>::min(), bottom = std::numeric_limits<Wide>::max();
      for (const Coeffs& d : dots) {
        const Wide t = Wide{m} * d.along_m + Wide{n} * d.along_n + d.base;
        top = std::max(top, t);
        bottom = std::min(bottom, t);
      }
      const Int w = narrow(top - bottom);
      if (w <= bound) visit(m, n, axpy(n, h2, base), w);
    }
    return true;
  };
  for (Int m = 0; slice(m); ++m) {
  }
  for (Int m = -1; slice(m); --m) {
  }
}

void check_plane_args(const LatticePolytope& p, const IntVec& h1, const IntVec& h2, const char* who) {
  if (p.dim() != 3 || !p.full_dimensional()) {
    throw std::domain_error(std::string(who) + ": polytope must be full-dimensional in space");
  }
  if (cross(h1, h2) == kZero) throw std::domain_error(std::string(who) + ": h1, h2 dependent");
}

}  // namespace

void for_each_plane_vector(const LatticePolytope& p, const IntVec& h1, const IntVec& h2,
                           const IntVec& h3, Int bound,
                           const std::function<void(Int, Int, const IntVec&, Int)>& visit) {
  check_plane_args(p, h1, h2, "for_each_plane_vector");
  if (width_in_direction(p, h3) > bound) throw std::domain_error("for_each_plane_vector: bound < ||h3||");
  scan_plane(p, h1, h2, h3, bound, visit);
}

PlaneMinimum minimize_over_plane(const LatticePolytope& p, const IntVec& h1, const IntVec& h2,
                                 const IntVec& h3) {
  check_plane_args(p, h1, h2, "minimize_over_plane");
  PlaneMinimum best{0, 0, h3, width_in_direction(p, h3)};
  SelectionKey best_key = selection_key(best.norm, h3);
  Int bound = best.norm;
  scan_plane(p, h1, h2, h3, bound, [&](Int m, Int n, const IntVec& v, Int w) {
    const SelectionKey k = selection_key(w, v);
    if (k < best_key) {
      best_key = k;
      best = {m, n, v, w};
      bound = w;
    }
  });
  return best;
}

Basis reduce_basis_3d(const LatticePolytope& p) {
  if (p.dim() != 3 || !p.full_dimensional()) {
    throw std::domain_error("reduce_basis_3d: polytope must be full-dimensional in space");
  }
  WidthNorm norm(p);
  IntMat rows = identity_matrix();
  for (int iter = 0; iter < kIterationCap; ++iter) {
    bool changed = false;
    IntMat sorted = rows;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&](const IntVec& a, const IntVec& b) { return norm(a) < norm(b); });
    if (sorted != rows) {
      rows = sorted;
      changed = true;
    }
    if (const Int m = best_multiple(norm, rows[0], rows[1]); m != 0) {
      rows[1] = axpy(m, rows[0], rows[1]);
      changed = true;
    }
    if (const PlaneMinimum pm = minimize_over_plane(p, rows[0], rows[1], rows[2]); pm.m != 0 || pm.n != 0) {
      rows[2] = pm.vector;
      changed = true;
    }
    if (!changed) return make_basis(p, rows, ReductionLevel::reduced);
  }
  throw std::logic_error("reduce_basis_3d: iteration cap reached");
}

bool is_reduced(const LatticePolytope& p, const Basis& b) {
  if (b.dim != 3 || p.dim() != 3 || !p.full_dimensional()) return false;
  const Int d = det(b.rows);
  if (d != 1 && d != -1) return false;
  const IntVec &h1 = b.rows[0], &h2 = b.rows[1], &h3 = b.rows[2];
  const Int n1 = width_in_direction(p, h1);
  const Int n2 = width_in_direction(p, h2);
  const Int n3 = width_in_direction(p, h3);
  if (!(n1 <= n2 && n2 <= n3)) return false;
  if (width_in_direction(p, add(h1, h2)) < n2 || width_in_direction(p, sub(h1, h2)) < n2) return false;
  return minimize_over_plane(p, h1, h2, h3).norm >= n3;
}

namespace {

Basis upgrade_reduced(const LatticePolytope& p, const Basis& b) {
  const IntVec &h1 = b.rows[0], &h2 = b.rows[1], &h3 = b.rows[2];
  const Int n1 = width_in_direction(p, h1);
  const Int n2 = width_in_direction(p, h2);
  const Int n3 = width_in_direction(p, h3);
  if (n3 >= n1 + n2) return make_basis(p, b.rows, ReductionLevel::minkowski);

  // Shortest element of {a h1 + b h2 + 2 h3 : |a| = |b| = 1}, up to sign.
  IntVec u{};
  SelectionKey u_key{};
  bool first = true;
  for (Int a : {1, -1}) {
    for (Int c : {1, -1}) {
      const IntVec v = add(add(scale(a, h1), scale(c, h2)), scale(2, h3));
      const SelectionKey k = selection_key(width_in_direction(p, v), v);
      if (first || k < u_key) {
        u = v;
        u_key = k;
        first = false;
      }
    }
  }
  const Int nu = std::get<0>(u_key);
  IntMat rows = b.rows;
  if (nu < n1) {
    rows = {u, h1, h3};
  } else if (nu < n2) {
    rows = {h1, u, h3};
  }
  return make_basis(p, rows, ReductionLevel::minkowski);
}

}  // namespace

Basis minkowski_upgrade(const LatticePolytope& p, const Basis& b) {
  if (!is_reduced(p, b)) throw std::domain_error("minkowski_upgrade: basis is not reduced");
  return upgrade_reduced(p, b);
}

Basis minkowski_basis(const LatticePolytope& p) { return upgrade_reduced(p, reduce_basis_3d(p)); }

std::pair<Int, Direction> lattice_width(const LatticePolytope& p) {
  if (!p.full_dimensional()) return {0, Direction(p.equations().front().normal)};
  if (p.dim() == 2) {
    const Basis b = gauss_reduce_2d(p, make_basis(p, identity_matrix()));
    return {b.norms[0], Direction(b.rows[0])};
  }
  const Basis b = minkowski_basis(p);
  return {b.norms[0], Direction(b.rows[0])};
}

}  // namespace latsize
