#include "latsize/generators.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace latsize {
namespace {

void check_range(const CountRange& r, const char* name) {
  if (r.lo < 1 || r.lo > r.hi) {
    throw std::domain_error(std::string("GenSpec: empty count range ") + name);
  }
}

void require_kind(const GenSpec& spec, GenKind kind) {
  validate(spec);
  if (spec.kind != kind) {
    throw std::domain_error("GenSpec kind is " + to_string(spec.kind) + ", expected " + to_string(kind));
  }
}

std::vector<IntVec> layer_points(Rng& rng, Int x, int count, Int bound) {
  std::vector<IntVec> pts;
  for (int i = 0; i < count; ++i) pts.push_back({x, rng.uniform(-bound, bound), rng.uniform(-bound, bound)});
  return pts;
}

int draw_count(Rng& rng, const CountRange& r) { return static_cast<int>(rng.uniform(r.lo, r.hi)); }

[[noreturn]] void exhausted(const char* who) {
  throw std::runtime_error(std::string(who) + ": no valid draw after " + std::to_string(kMaxRedraws) + " attempts");
}

}  // namespace

std::string to_string(GenKind kind) {
  switch (kind) {
    case GenKind::white: return "white";
    case GenKind::width_one: return "width_one";
    case GenKind::general: return "general";
    case GenKind::parallelepiped: return "parallelepiped";
    case GenKind::interior: return "interior";
  }
  return "general";
}

GenKind gen_kind_from_string(const std::string& s) {
  if (s == "white") return GenKind::white;
  if (s == "width_one" || s == "width-one") return GenKind::width_one;
  if (s == "general" || s == "random") return GenKind::general;
  if (s == "parallelepiped") return GenKind::parallelepiped;
  if (s == "interior") return GenKind::interior;
  throw std::domain_error("unknown generator kind '" + s + "'");
}

void validate(const GenSpec& spec) {
  if (spec.bound < 1) throw std::domain_error("GenSpec: bound must be >= 1");
  if (spec.bound > kCoordinateLimit / 16) throw std::domain_error("GenSpec: bound too large");
  check_range(spec.n0, "n0");
  check_range(spec.n1, "n1");
  check_range(spec.n, "n");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) { return splitmix64(splitmix64(seed) ^ index); }

Int Rng::uniform(Int lo, Int hi) {
  if (lo > hi) throw std::domain_error("Rng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<Int>(engine_());  // full 64-bit range
  // Largest multiple of span representable; draws at or above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t r = engine_();
  while (r >= limit) r = engine_();
  return static_cast<Int>(static_cast<std::uint64_t>(lo) + r % span);
}

LatticePolytope white_tetrahedron(Int p, Int q) {
  if (p < 0 || q < 0) throw std::domain_error("white_tetrahedron: p and q must be nonnegative");
  if (std::gcd(p, q) != 1) throw std::domain_error("white_tetrahedron: gcd(p, q) must be 1");
  const std::vector<IntVec> pts{unit_vector(0), unit_vector(1), unit_vector(2), IntVec{p, q, 1}};
  return convex_hull(3, pts);
}

LatticePolytope empty_parallelepiped(Int a, Int b, Int c, Int d) {
  const Int det2 = a * d - b * c;
  if (det2 != 1 && det2 != -1) throw std::domain_error("empty_parallelepiped: ad - bc must be +-1");
  const std::vector<IntVec> pts{{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1},
                                {1, 0, 0}, {1, a, b}, {1, c, d}, {1, a + c, b + d}};
  return convex_hull(3, pts);
}

std::pair<Int, Int> random_white_parameters(const GenSpec& spec) {
  require_kind(spec, GenKind::white);
  Rng rng(spec.seed);
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    const Int p = rng.uniform(0, spec.bound);
    const Int q = rng.uniform(0, spec.bound);
    if (std::gcd(p, q) == 1) return {p, q};
  }
  exhausted("random_white_parameters");
}

std::array<Int, 4> random_parallelepiped_parameters(const GenSpec& spec) {
  require_kind(spec, GenKind::parallelepiped);
  Rng rng(spec.seed);
  // Draw the first column, then choose uniformly among the completions inside the box.
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    const Int a = rng.uniform(1, spec.bound);
    const Int b = rng.uniform(1, spec.bound);
    std::vector<std::pair<Int, Int>> completions;
    for (Int c = 1; c <= spec.bound; ++c)
      for (Int d = 1; d <= spec.bound; ++d)
        if (a * d - b * c == 1 || a * d - b * c == -1) completions.emplace_back(c, d);
    if (completions.empty()) continue;
    const auto& [c, d] = completions[static_cast<std::size_t>(rng.uniform(0, static_cast<Int>(completions.size()) - 1))];
    return {a, b, c, d};
  }
  exhausted("random_parallelepiped_parameters");
}

LatticePolytope random_width_one(const GenSpec& spec) {
  require_kind(spec, GenKind::width_one);
  Rng rng(spec.seed);
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    std::vector<IntVec> pts = layer_points(rng, 0, draw_count(rng, spec.n0), spec.bound);
    const std::vector<IntVec> upper = layer_points(rng, 1, draw_count(rng, spec.n1), spec.bound);
    pts.insert(pts.end(), upper.begin(), upper.end());
    LatticePolytope p = convex_hull(3, pts);
    if (p.full_dimensional()) return p;
  }
  exhausted("random_width_one");
}

LatticePolytope random_polytope(const GenSpec& spec) {
  require_kind(spec, GenKind::general);
  Rng rng(spec.seed);
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    const int count = draw_count(rng, spec.n);
    std::vector<IntVec> pts;
    for (int i = 0; i < count; ++i) {
      pts.push_back({rng.uniform(-spec.bound, spec.bound), rng.uniform(-spec.bound, spec.bound),
                     rng.uniform(-spec.bound, spec.bound)});
    }
    LatticePolytope p = convex_hull(3, pts);
    if (p.full_dimensional()) return p;
  }
  exhausted("random_polytope");
}

LatticePolytope random_interior_class(const GenSpec& spec) {
  require_kind(spec, GenKind::interior);
  Rng rng(spec.seed);
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    std::vector<IntVec> lower;
    for (int i = draw_count(rng, spec.n0); i > 0; --i) {
      lower.push_back({rng.uniform(-spec.bound, spec.bound), rng.uniform(-spec.bound, spec.bound), 0});
    }
    const LatticePolytope base = convex_hull(2, lower);
    if (!base.full_dimensional()) continue;
    std::vector<IntVec> interior;
    for (const IntVec& x : lattice_points(base)) {
      bool strict = true;
      for (const Halfspace& f : base.facets()) strict = strict && dot(f.normal, x) < f.offset;
      if (strict) interior.push_back(x);
    }
    if (interior.empty()) continue;

    // Upper layer: a few interior points, shifted by a random lattice vector.
    const Int dy = rng.uniform(-spec.bound, spec.bound);
    const Int dz = rng.uniform(-spec.bound, spec.bound);
    std::vector<IntVec> pts;
    for (const IntVec& x : lower) pts.push_back({0, x[0], x[1]});
    for (int i = draw_count(rng, spec.n1); i > 0; --i) {
      const IntVec& x = interior[static_cast<std::size_t>(rng.uniform(0, static_cast<Int>(interior.size()) - 1))];
      pts.push_back({1, x[0] + dy, x[1] + dz});
    }
    const UnimodularMap scramble = random_unimodular(rng, 3, spec.bound);
    return convex_hull(3, transform(pts, scramble));
  }
  exhausted("random_interior_class");
}

LatticePolytope generate(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::white: {
      const auto [p, q] = random_white_parameters(spec);
      return white_tetrahedron(p, q);
    }
    case GenKind::parallelepiped: {
      const auto [a, b, c, d] = random_parallelepiped_parameters(spec);
      return empty_parallelepiped(a, b, c, d);
    }
    case GenKind::width_one: return random_width_one(spec);
    case GenKind::general: return random_polytope(spec);
    case GenKind::interior: return random_interior_class(spec);
  }
  throw std::domain_error("generate: unknown kind");
}

UnimodularMap random_unimodular(Rng& rng, int steps, Int translation_bound) {
  IntMat a = identity_matrix();
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, 2));
    auto j = static_cast<std::size_t>(rng.uniform(0, 1));
    if (j >= i) ++j;
    const Int k = rng.uniform(-2, 2);
    a[i] = axpy(k, a[j], a[i]);
    if (rng.uniform(0, 1) == 1) a[i] = negate(a[i]);
    std::swap(a[i], a[j]);
  }
  const IntVec v{rng.uniform(-translation_bound, translation_bound), rng.uniform(-translation_bound, translation_bound),
                 rng.uniform(-translation_bound, translation_bound)};
  return UnimodularMap(3, a, v);
}

}  // namespace latsize
