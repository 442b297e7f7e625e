#include "latsize/core.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace latsize {

Direction::Direction(const IntVec& h) : h_(canonical_sign(h)) {
  if (h == kZero) throw std::domain_error("Direction: zero vector");
  if (!is_primitive(h)) throw std::domain_error("Direction: not primitive " + to_string(h));
}

UnimodularMap::UnimodularMap(int dim, const IntMat& a, const IntVec& v) : dim_(dim), a_(a), v_(v) {
  if (dim != 2 && dim != 3) throw std::domain_error("UnimodularMap: dimension must be 2 or 3");
  if (dim == 2 && (a[2] != unit_vector(2) || a[0][2] != 0 || a[1][2] != 0 || v[2] != 0)) {
    throw std::domain_error("UnimodularMap: planar map must fix the third coordinate");
  }
  const Int d = det(a);
  if (d != 1 && d != -1) throw std::domain_error("UnimodularMap: det A = " + std::to_string(d));
}

UnimodularMap UnimodularMap::identity(int dim) { return {dim, identity_matrix(), kZero}; }

UnimodularMap UnimodularMap::translation(int dim, const IntVec& v) {
  return {dim, identity_matrix(), v};
}

UnimodularMap UnimodularMap::linear(int dim, const IntMat& a) { return {dim, a, kZero}; }

IntVec UnimodularMap::operator()(const IntVec& x) const { return add(apply(a_, x), v_); }

UnimodularMap UnimodularMap::then(const UnimodularMap& next) const {
  if (next.dim_ != dim_) throw std::domain_error("UnimodularMap::then: dimension mismatch");
  return {dim_, multiply(next.a_, a_), next(v_)};
}

Int width_in_direction(std::span<const IntVec> points, const IntVec& h) {
  if (points.empty()) throw std::domain_error("width_in_direction: empty vertex list");
  Wide lo = dot_wide(h, points[0]), hi = lo;
  for (const IntVec& x : points.subspan(1)) {
    const Wide t = dot_wide(h, x);
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  return narrow(hi - lo);
}

Int width_in_direction(const LatticePolytope& p, const IntVec& h) {
  return width_in_direction(p.vertices(), h);
}

Int l1(std::span<const IntVec> points, int dim) {
  if (points.empty()) throw std::domain_error("l1: empty vertex list");
  Wide max_sum = std::numeric_limits<Int>::min();
  std::array<Int, 3> mins{std::numeric_limits<Int>::max(), std::numeric_limits<Int>::max(),
                          std::numeric_limits<Int>::max()};
  for (const IntVec& x : points) {
    Wide s = 0;
    for (int i = 0; i < dim; ++i) {
      const auto k = static_cast<std::size_t>(i);
      s += x[k];
      mins[k] = std::min(mins[k], x[k]);
    }
    max_sum = std::max(max_sum, s);
  }
  for (int i = 0; i < dim; ++i) max_sum -= mins[static_cast<std::size_t>(i)];
  return narrow(max_sum);
}

Int l1(const LatticePolytope& p) { return l1(p.vertices(), p.dim()); }

namespace {

IntMat sign_matrix(std::span<const int> signs) {
  IntMat a = identity_matrix();
  for (std::size_t i = 0; i < signs.size(); ++i) a[i][i] = signs[i];
  return a;
}

std::vector<int> signs_from_mask(int dim, unsigned mask) {
  std::vector<int> s(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) s[static_cast<std::size_t>(i)] = (mask >> i) & 1u ? -1 : 1;
  return s;
}

}  // namespace

Int corner_l(const LatticePolytope& p, std::span<const int> signs) {
  if (static_cast<int>(signs.size()) != p.dim()) {
    throw std::domain_error("corner_l: sign vector length does not match dimension");
  }
  for (int s : signs)
    if (s != 1 && s != -1) throw std::domain_error("corner_l: signs must be +1 or -1");
  const IntMat d = sign_matrix(signs);
  std::vector<IntVec> image;
  image.reserve(p.vertices().size());
  for (const IntVec& x : p.vertices()) image.push_back(apply(d, x));
  return l1(image, p.dim());
}

std::pair<Int, UnimodularMap> naive_fit(const LatticePolytope& p) {
  Int best = std::numeric_limits<Int>::max();
  std::vector<int> best_signs;
  for (unsigned mask = 0; mask < (1u << p.dim()); ++mask) {
    const std::vector<int> s = signs_from_mask(p.dim(), mask);
    const Int v = corner_l(p, s);
    if (v < best) {
      best = v;
      best_signs = s;
    }
  }
  const auto linear = UnimodularMap::linear(p.dim(), sign_matrix(best_signs));
  const std::vector<IntVec> image = transform(p.vertices(), linear);
  return {best, linear.then(UnimodularMap::translation(p.dim(), min_corner_shift(image, p.dim())))};
}

Int nls_simplex(const LatticePolytope& p) { return naive_fit(p).first; }

Int nls_cube(const LatticePolytope& p) {
  Int best = 0;
  for (int i = 0; i < p.dim(); ++i) best = std::max(best, width_in_direction(p, unit_vector(i)));
  return best;
}

std::vector<IntVec> transform(std::span<const IntVec> points, const UnimodularMap& t) {
  std::vector<IntVec> out;
  out.reserve(points.size());
  for (const IntVec& x : points) out.push_back(t(x));
  return out;
}

IntVec min_corner_shift(std::span<const IntVec> points, int dim) {
  IntVec shift = kZero;
  for (int i = 0; i < dim; ++i) {
    const auto k = static_cast<std::size_t>(i);
    Int lo = std::numeric_limits<Int>::max();
    for (const IntVec& x : points) lo = std::min(lo, x[k]);
    shift[k] = -lo;
  }
  return shift;
}

LatticePolytope apply_map(const LatticePolytope& p, const UnimodularMap& t) {
  if (p.dim() != t.dim()) throw std::domain_error("apply_map: dimension mismatch");
  const std::vector<IntVec> image = transform(p.vertices(), t);
  return convex_hull(p.dim(), image);
}

std::vector<IntVec> lattice_points(const LatticePolytope& p) {
  IntVec lo = p.vertices().front(), hi = lo;
  for (const IntVec& x : p.vertices()) {
    for (std::size_t i = 0; i < 3; ++i) {
      lo[i] = std::min(lo[i], x[i]);
      hi[i] = std::max(hi[i], x[i]);
    }
  }
  std::vector<IntVec> out;
  for (Int x = lo[0]; x <= hi[0]; ++x)
    for (Int y = lo[1]; y <= hi[1]; ++y)
      for (Int z = lo[2]; z <= hi[2]; ++z)
        if (p.contains({x, y, z})) out.push_back({x, y, z});
  return out;
}

bool is_empty_polytope(const LatticePolytope& p) {
  return lattice_points(p).size() == p.vertices().size();
}

InscribedBall inradius_bound(const LatticePolytope& p) {
  if (!p.full_dimensional()) throw std::domain_error("inradius_bound: polytope is not full-dimensional");
  const auto count = static_cast<long long>(p.vertices().size());
  InscribedBall ball;
  for (std::size_t i = 0; i < 3; ++i) {
    Rational s = 0;
    for (const IntVec& x : p.vertices()) s += x[i];
    ball.center[i] = s / count;
  }
  bool first = true;
  for (const Halfspace& f : p.facets()) {
    Rational gap = Rational(f.offset);
    for (std::size_t i = 0; i < 3; ++i) gap -= ball.center[i] * f.normal[i];
    const Rational d2 = gap * gap / Rational(euclid_sq(f.normal));
    if (first || d2 < ball.radius_sq) ball.radius_sq = d2;
    first = false;
  }
  return ball;
}

Int WidthNorm::operator()(const IntVec& h) {
  const IntVec key = canonical_sign(h);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const Int w = width_in_direction(*p_, key);
  memo_.emplace(key, w);
  return w;
}

}  // namespace latsize
