#include "latsize/arith.hpp"

#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace latsize {

Int narrow(Wide x) {
  if (x > std::numeric_limits<Int>::max() || x < std::numeric_limits<Int>::min()) {
    throw std::overflow_error("latsize: 64-bit integer overflow");
  }
  return static_cast<Int>(x);
}

Wide dot_wide(const IntVec& a, const IntVec& b) {
  return Wide{a[0]} * b[0] + Wide{a[1]} * b[1] + Wide{a[2]} * b[2];
}

Int dot(const IntVec& a, const IntVec& b) { return narrow(dot_wide(a, b)); }

IntVec add(const IntVec& a, const IntVec& b) {
  return {narrow(Wide{a[0]} + b[0]), narrow(Wide{a[1]} + b[1]), narrow(Wide{a[2]} + b[2])};
}

IntVec sub(const IntVec& a, const IntVec& b) {
  return {narrow(Wide{a[0]} - b[0]), narrow(Wide{a[1]} - b[1]), narrow(Wide{a[2]} - b[2])};
}

IntVec scale(Int k, const IntVec& a) {
  return {narrow(Wide{k} * a[0]), narrow(Wide{k} * a[1]), narrow(Wide{k} * a[2])};
}

IntVec axpy(Int k, const IntVec& a, const IntVec& b) {
  return {narrow(Wide{k} * a[0] + b[0]), narrow(Wide{k} * a[1] + b[1]),
          narrow(Wide{k} * a[2] + b[2])};
}

IntVec negate(const IntVec& a) { return scale(-1, a); }

IntVec cross(const IntVec& a, const IntVec& b) {
  return {narrow(Wide{a[1]} * b[2] - Wide{a[2]} * b[1]),
          narrow(Wide{a[2]} * b[0] - Wide{a[0]} * b[2]),
          narrow(Wide{a[0]} * b[1] - Wide{a[1]} * b[0])};
}

Int euclid_sq(const IntVec& a) { return narrow(dot_wide(a, a)); }

Int content(const IntVec& a) { return std::gcd(std::gcd(a[0], a[1]), a[2]); }

bool is_primitive(const IntVec& a) { return content(a) == 1; }

IntVec primitive_part(const IntVec& a) {
  const Int g = content(a);
  if (g == 0) return a;
  return {a[0] / g, a[1] / g, a[2] / g};
}

IntVec canonical_sign(const IntVec& a) {
  for (Int x : a) {
    if (x > 0) return a;
    if (x < 0) return negate(a);
  }
  return a;
}

Int det(const IntMat& m) {
  const Wide d = Wide{m[0][0]} * (Wide{m[1][1]} * m[2][2] - Wide{m[1][2]} * m[2][1]) -
                 Wide{m[0][1]} * (Wide{m[1][0]} * m[2][2] - Wide{m[1][2]} * m[2][0]) +
                 Wide{m[0][2]} * (Wide{m[1][0]} * m[2][1] - Wide{m[1][1]} * m[2][0]);
  return narrow(d);
}

IntMat transpose(const IntMat& m) {
  IntMat t{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t[i][j] = m[j][i];
  return t;
}

IntMat multiply(const IntMat& a, const IntMat& b) {
  IntMat r{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Wide s = 0;
      for (std::size_t k = 0; k < 3; ++k) s += Wide{a[i][k]} * b[k][j];
      r[i][j] = narrow(s);
    }
  }
  return r;
}

IntVec apply(const IntMat& m, const IntVec& x) { return {dot(m[0], x), dot(m[1], x), dot(m[2], x)}; }

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

Int ext_gcd(Int a, Int b, Int& x, Int& y) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    const Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(' << v[0] << ',' << v[1] << ',' << v[2] << ')';
  return os.str();
}

std::string to_string(const IntMat& m) {
  return '[' + to_string(m[0]) + ',' + to_string(m[1]) + ',' + to_string(m[2]) + ']';
}

}  // namespace latsize
