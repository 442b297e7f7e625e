// Integer vector and matrix primitives shared by every module.
//
// All lattice data is stored in three-component vectors. Planar data keeps
// its last coordinate at zero, so dot products, widths and the l1
// functional need no special casing for d = 2.

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>

namespace latsize {

using Int = std::int64_t;
__extension__ typedef __int128 Wide;
using IntVec = std::array<Int, 3>;
/// Row-major 3x3 integer matrix; element [i][j] is row i, column j.
using IntMat = std::array<IntVec, 3>;

/// Input coordinates are bounded so hull predicates fit in 128 bits.
inline constexpr Int kCoordinateLimit = Int{1} << 20;

inline constexpr IntVec kZero{0, 0, 0};

constexpr IntVec unit_vector(int i) {
  IntVec e{0, 0, 0};
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

constexpr IntMat identity_matrix() { return {unit_vector(0), unit_vector(1), unit_vector(2)}; }

/// Narrows a 128-bit intermediate, throwing std::overflow_error when it does not fit.
Int narrow(Wide x);

Int dot(const IntVec& a, const IntVec& b);
Wide dot_wide(const IntVec& a, const IntVec& b);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(Int k, const IntVec& a);
/// k*a + b with overflow checks.
IntVec axpy(Int k, const IntVec& a, const IntVec& b);
IntVec negate(const IntVec& a);
IntVec cross(const IntVec& a, const IntVec& b);
Int euclid_sq(const IntVec& a);

/// gcd of the absolute values of the entries; 0 for the zero vector.
Int content(const IntVec& a);
bool is_primitive(const IntVec& a);
/// Divides by the content. The zero vector maps to itself.
IntVec primitive_part(const IntVec& a);
/// Flips sign so the first nonzero entry is positive.
IntVec canonical_sign(const IntVec& a);

Int det(const IntMat& m);
IntMat transpose(const IntMat& m);
IntMat multiply(const IntMat& a, const IntMat& b);
IntVec apply(const IntMat& m, const IntVec& x);

Int floor_div(Int a, Int b);
Int ceil_div(Int a, Int b);

/// Extended gcd: returns g = gcd(a, b) >= 0 with x*a + y*b = g.
Int ext_gcd(Int a, Int b, Int& x, Int& y);

std::string to_string(const IntVec& v);
std::string to_string(const IntMat& m);

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace latsize
