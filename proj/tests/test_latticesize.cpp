#include <gtest/gtest.h>

#include <numeric>
#include <stdexcept>

#include "fixtures.hpp"
#include "latsize/latticesize.hpp"
#include "oracles.hpp"

using namespace fixtures;

namespace {

void expect_witness(const LatticePolytope& p, const LatticeSizeResult& r) {
  const auto img = transform(p.vertices(), r.witness);
  EXPECT_EQ(oracle::l1(img, p.dim()), r.value);
  EXPECT_EQ(min_corner_shift(img, p.dim()), kZero);
}

bool contains(const CandidateSet& c, const IntVec& h) {
  return std::ranges::any_of(c.directions, [&](const Direction& d) { return d.vec() == Direction(h).vec(); });
}

std::vector<std::pair<Int, Int>> coprime_pairs(Int bound) {
  std::vector<std::pair<Int, Int>> out;
  for (Int p = 0; p <= bound; ++p)
    for (Int q = 0; q <= bound; ++q)
      if (std::gcd(p, q) == 1) out.push_back({p, q});
  return out;
}

}  // namespace

TEST(ShortDirections, Cube) {
  EXPECT_TRUE(enumerate_short_directions(cube(), 1).directions.empty());
  const CandidateSet c = enumerate_short_directions(cube(), 2);
  ASSERT_EQ(c.directions.size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(contains(c, unit_vector(i)));
  EXPECT_EQ(c.widths, (std::vector<Int>{1, 1, 1}));
}

TEST(ShortDirections, ExampleContainsWitnessRows) {
  const CandidateSet c = enumerate_short_directions(example(), 14);
  for (const IntVec& h : {IntVec{1, 0, 0}, IntVec{2, -1, 0}, IntVec{7, 2, 1}}) {
    EXPECT_TRUE(contains(c, h)) << to_string(h);
    EXPECT_LE(width_in_direction(example(), h), 13);
  }
}

TEST(ShortDirections, SortedAndConsistent) {
  const CandidateSet c = enumerate_short_directions(example(), 15);
  ASSERT_EQ(c.directions.size(), c.widths.size());
  for (std::size_t i = 0; i < c.widths.size(); ++i) {
    EXPECT_EQ(c.widths[i], width_in_direction(example(), c.directions[i].vec()));
    if (i) EXPECT_LE(c.widths[i - 1], c.widths[i]);
  }
}

TEST(ShortDirections, Preconditions) {
  EXPECT_THROW(enumerate_short_directions(hull3({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}), 3), std::domain_error);
  EXPECT_THROW(enumerate_short_directions(cube(), 0), std::domain_error);
}

TEST(BruteForce, Examples) {
  const LatticeSizeResult d = ls_bruteforce(simplex3());
  EXPECT_EQ(d.value, 1);
  EXPECT_EQ(d.witness, UnimodularMap::identity(3));
  EXPECT_EQ(ls_bruteforce(cube()).value, 3);
  const LatticeSizeResult e = ls_bruteforce(example());
  EXPECT_EQ(e.value, 13);
  expect_witness(example(), e);
  EXPECT_EQ(e.method, Method::brute);
}

TEST(BruteForce, PrintedMatrixIsAWitness) {
  const IntMat a{IntVec{1, 0, 0}, {2, -1, 0}, {7, 2, 1}};
  EXPECT_EQ(oracle::l1(oracle::image(example().vertices(), a), 3), ls_bruteforce(example()).value);
}

TEST(BruteForce, MatchesUnprunedOracle) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const LatticePolytope p = small_polytope(s, 2, 5);
    const LatticeSizeResult r = ls_bruteforce(p);
    EXPECT_EQ(r.value, oracle::ls3d(p.vertices())) << s;
    expect_witness(p, r);
  }
}

TEST(BruteForce, ThreadCountDoesNotChangeResult) {
  for (std::uint64_t s = 0; s < 6; ++s) {
    const LatticePolytope p = generate({.kind = GenKind::width_one, .seed = s});
    const LatticeSizeResult one = ls_bruteforce(p);
    const LatticeSizeResult four = ls_bruteforce(p, {.threads = 4});
    EXPECT_EQ(one.value, four.value);
    EXPECT_EQ(one.witness, four.witness);
    EXPECT_EQ(ls_bruteforce(p, {.reduce_first = true}).value, one.value);
  }
}

TEST(BruteForce, Degenerate) {
  EXPECT_THROW(ls_bruteforce(hull3({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}})), std::domain_error);
}

TEST(Slab, NormalizesWidthOne) {
  for (auto [p, q] : coprime_pairs(6)) {
    const LatticePolytope w = white_tetrahedron(p, q);
    const SlabForm s = normalize_to_slab(w);
    EXPECT_EQ(width_in_direction(s.polytope, {1, 0, 0}), 1);
    EXPECT_EQ(min_corner_shift(s.polytope.vertices(), 3)[0], 0);
    EXPECT_EQ(apply_map(w, s.map), s.polytope);
  }
  EXPECT_THROW(normalize_to_slab(simplex3(2)), std::domain_error);
}

TEST(Slab, InvariantUnderPriorMap) {
  Rng rng(21);
  const LatticePolytope w = white_tetrahedron(5, 3);
  for (int i = 0; i < 10; ++i) {
    const LatticePolytope moved = apply_map(w, random_unimodular(rng, 5, 4));
    const SlabForm s = normalize_to_slab(moved);
    EXPECT_EQ(width_in_direction(s.polytope, {1, 0, 0}), 1);
    EXPECT_EQ(lattice_points(s.polytope).size(), 4u);
  }
}

TEST(WidthOne, Examples) {
  EXPECT_EQ(ls_width_one(simplex3()).value, 1);
  EXPECT_EQ(ls_width_one(example()).value, 14);
  EXPECT_EQ(ls_width_one(white_tetrahedron(1, 0)).value, 1);
  EXPECT_THROW(ls_width_one(simplex3(2)), std::domain_error);
}

TEST(WidthOne, EqualsBruteForceOnWhiteTetrahedra) {
  for (auto [p, q] : coprime_pairs(8)) {
    const LatticePolytope w = white_tetrahedron(p, q);
    const LatticeSizeResult r = ls_width_one(w);
    EXPECT_EQ(r.value, ls_bruteforce(w).value) << p << "," << q;
    expect_witness(w, r);
  }
}

TEST(WidthOne, EqualsBruteForceOnParallelepipeds) {
  int checked = 0;
  for (Int a = 1; a <= 6; ++a)
    for (Int b = 1; b <= 6; ++b)
      for (Int c = 1; c <= 6; ++c)
        for (Int d = 1; d <= 6; ++d) {
          if (std::abs(a * d - b * c) != 1) continue;
          const LatticePolytope p = empty_parallelepiped(a, b, c, d);
          EXPECT_EQ(ls_width_one(p).value, ls_bruteforce(p).value) << a << b << c << d;
          ++checked;
        }
  EXPECT_GT(checked, 10);
}

TEST(ReducedSearch, Examples) {
  EXPECT_EQ(reduced_search(simplex3()).value, 1);
  const LatticeSizeResult e = reduced_search(example());
  EXPECT_EQ(e.value, 14);
  expect_witness(example(), e);
  EXPECT_EQ(e.method, Method::reduced_search);
}

TEST(ReducedSearch, UpperBoundAndEmptyEquality) {
  for (auto [p, q] : coprime_pairs(8)) {
    const LatticePolytope w = white_tetrahedron(p, q);
    const Int bf = ls_bruteforce(w).value;
    const Int rs = reduced_search(w).value;
    EXPECT_GE(rs, bf);
    // Inside the unit cube the fixed search family can miss the optimum.
    if (minkowski_basis(w).norms[2] > 1) EXPECT_EQ(rs, bf) << p << "," << q;
  }
  EXPECT_EQ(reduced_search(white_tetrahedron(1, 0)).value, 2);
  EXPECT_EQ(ls_bruteforce(white_tetrahedron(1, 0)).value, 1);
}

TEST(Planar, Examples) {
  EXPECT_EQ(ls_delta_2d(simplex2()).value, 1);
  EXPECT_EQ(ls_delta_2d(square()).value, 2);
  const LatticePolytope tri = hull2({{0, 0, 0}, {3, 1, 0}, {1, 2, 0}});
  const LatticeSizeResult r = ls_delta_2d(tri);
  EXPECT_EQ(r.value, oracle::ls2d(tri.vertices()));
  expect_witness(tri, r);
  EXPECT_EQ(r.method, Method::two_d);
}

TEST(Planar, SegmentsAndPoints) {
  EXPECT_EQ(ls_delta_2d(hull2({{3, -2, 0}})).value, 0);
  EXPECT_EQ(ls_delta_2d(hull2({{0, 0, 0}, {5, 1, 0}})).value, 1);
  EXPECT_EQ(ls_delta_2d(hull2({{0, 0, 0}, {4, 2, 0}})).value, 2);
}

TEST(Planar, MatchesOracleOnRandomPolygons) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const LatticePolytope p = small_polygon(s, 5, 6);
    const LatticeSizeResult r = ls_delta_2d(p);
    EXPECT_EQ(r.value, oracle::ls2d(p.vertices())) << s;
    expect_witness(p, r);
  }
}

TEST(InteriorClass, DilatedSimplexOverInteriorPoint) {
  const LatticePolytope p = hull3({{0, 0, 0}, {0, 4, 0}, {0, 0, 4}, {1, 1, 1}});
  const auto r = ls_interior_class(p);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->value, 4);
  EXPECT_EQ(ls_bruteforce(p).value, 4);
  expect_witness(p, *r);
}

TEST(InteriorClass, DilatedSimplexOverTriangle) {
  const LatticePolytope p = hull3({{0, 0, 0}, {0, 5, 0}, {0, 0, 5}, {1, 1, 1}, {1, 2, 1}, {1, 1, 2}});
  const auto r = ls_interior_class(p);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->value, 5);
  EXPECT_EQ(ls_bruteforce(p).value, 5);
}

TEST(InteriorClass, HypothesisFails) {
  EXPECT_FALSE(ls_interior_class(hull3({{0, 0, 0}, {0, 4, 0}, {0, 0, 4}, {1, 0, 0}, {1, 3, 0}})).has_value());
  EXPECT_FALSE(ls_interior_class(white_tetrahedron(3, 2)).has_value());
  EXPECT_THROW(ls_interior_class(simplex3(2)), std::domain_error);
}

TEST(InteriorClass, GeneratedInstancesMatchBruteForce) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const LatticePolytope p = generate({.kind = GenKind::interior, .n1 = {1, 3}, .seed = s});
    const auto r = ls_interior_class(p);
    ASSERT_TRUE(r.has_value()) << s;
    // The instances are scrambled by a unimodular map; reducing first keeps the search small.
    EXPECT_EQ(r->value, ls_bruteforce(p, {.reduce_first = true}).value) << s;
    expect_witness(p, *r);
  }
}

TEST(CubeSize, Examples) {
  EXPECT_EQ(ls_cube_via_reduction(cube()), 1);
  EXPECT_EQ(ls_cube_via_reduction(example()), 11);
  Rng rng(3);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(ls_cube_via_reduction(apply_map(cube(), random_unimodular(rng, 5, 3))), 1);
}

TEST(Auto, Dispatch) {
  EXPECT_EQ(lattice_size_auto(square()).method, Method::two_d);
  EXPECT_EQ(lattice_size_auto(white_tetrahedron(7, 5)).method, Method::slab);
  EXPECT_EQ(lattice_size_auto(hull3({{0, 0, 0}, {0, 4, 0}, {0, 0, 4}, {1, 1, 1}})).method, Method::interior_class);
  const LatticeSizeResult e = lattice_size_auto(example());
  EXPECT_EQ(e.method, Method::brute);
  EXPECT_EQ(e.value, 13);
}

TEST(MethodNames, RoundTrip) {
  EXPECT_EQ(to_string(Method::slab), "slab");
  EXPECT_EQ(to_string(Method::reduced_search), "reduced_search");
}
