#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "latsize/latticesize.hpp"

namespace latsize {
namespace {

using boost::multiprecision::cpp_int;

// Smallest B >= 0 with B^2 >= num/den.
Int ceil_sqrt_ratio(const cpp_int& num, const cpp_int& den) {
  const double approx = std::sqrt(static_cast<double>(num) / static_cast<double>(den));
  Int b = static_cast<Int>(std::ceil(approx));
  while (cpp_int(b) * b * den < num) ++b;
  while (b > 0 && cpp_int(b - 1) * (b - 1) * den >= num) --b;
  return b;
}

}  // namespace

CandidateSet enumerate_short_directions(const LatticePolytope& p, Int l) {
  if (p.dim() != 3 || !p.full_dimensional()) {
    throw std::domain_error("enumerate_short_directions: polytope must be full-dimensional in space");
  }
  if (l < 1) throw std::domain_error("enumerate_short_directions: bound must be >= 1");

  // w_h(P) >= w_h(ball) = 2 R |h|, so w_h(P) < l forces 4 R^2 |h|^2 < l^2.
  const InscribedBall ball = inradius_bound(p);
  const cpp_int r2_num = numerator(ball.radius_sq);
  const cpp_int r2_den = denominator(ball.radius_sq);
  const cpp_int l_sq = cpp_int(l) * l;
  const Int box = ceil_sqrt_ratio(l_sq * r2_den, 4 * r2_num);
  // |h|^2 < l^2 / (4 R^2) as an integer bound on |h|^2.
  const Int max_len = static_cast<Int>((l_sq * r2_den - 1) / (4 * r2_num));

  struct Entry {
    Int width;
    Int length;
    IntVec h;
  };
  std::vector<Entry> found;
  // Canonical half of the box: first nonzero coordinate positive.
  for (Int x = 0; x <= box; ++x) {
    for (Int y = (x == 0 ? 0 : -box); y <= box; ++y) {
      for (Int z = (x == 0 && y == 0 ? 1 : -box); z <= box; ++z) {
        const IntVec h{x, y, z};
        const Int len = euclid_sq(h);
        if (len > max_len) continue;
        if (!is_primitive(h)) continue;
        const Int w = width_in_direction(p, h);
        if (w < l) found.push_back({w, len, h});
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.width, a.length, a.h) < std::tie(b.width, b.length, b.h);
  });

  CandidateSet out;
  out.bound_l = l;
  out.directions.reserve(found.size());
  out.widths.reserve(found.size());
  for (const Entry& e : found) {
    out.directions.emplace_back(e.h);
    out.widths.push_back(e.width);
  }
  return out;
}

}  // namespace latsize
