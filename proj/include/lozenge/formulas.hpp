#pragma once

// Closed-form product formulas, evaluated over exact rationals. Each public
// formula asserts that its final value is an integer.

#include "lozenge/bigcount.hpp"
#include "lozenge/lattice_region.hpp"

#include <array>
#include <string>

namespace lozenge {

/// Rising factorial a(a+1)...(a+n-1); (a)_0 = 1, and so is any n < 0.
inline Rational pochhammer(const Rational& a, long n) {
  Rational r = 1;
  for (long t = 0; t < n; ++t) r *= a + t;
  return r;
}

inline Rational pochhammer(long a, long n) { return pochhammer(Rational(a), n); }

namespace detail {

inline Rational half(long v) { return Rational(v, 2); }

// prod_{i=lo}^{hi} (a + i)_n / (b + i)_m, with all shifts rational.
inline Rational pochhammer_ratio_product(long lo, long hi, const Rational& a, long n, const Rational& b, long m) {
  Rational r = 1;
  for (long i = lo; i <= hi; ++i) r *= pochhammer(a + i, n) / pochhammer(b + i, m);
  return r;
}

inline Rational box_product(long x, long y, long z) {
  Rational r = 1;
  for (long i = 1; i <= x; ++i)
    for (long j = 1; j <= y; ++j)
      for (long k = 1; k <= z; ++k) r *= Rational(i + j + k - 1, i + j + k - 2);
  return r;
}

inline void require(bool ok, const char* name, long x, long y, long z, long k, const char* why) {
  if (!ok) {
    throw InvalidParams(std::string(name) + "(" + std::to_string(x) + "," + std::to_string(y) + "," +
                        std::to_string(z) + "," + std::to_string(k) + "): " + why);
  }
}

inline bool even(long v) { return v % 2 == 0; }

inline void require_common(const char* name, long x, long y, long z, long k) {
  require(x >= 0 && y >= 0 && z >= 0 && k >= 0, name, x, y, z, k, "arguments must be nonnegative");
  require(k <= x && k <= y && k <= z, name, x, y, z, k, "k exceeds min(x, y, z)");
}

}  // namespace detail

/// Number of plane partitions in an x by y by z box (lozenge tilings of H(x,y,z)).
inline BigInt macmahon(long x, long y, long z) {
  if (x < 0 || y < 0 || z < 0) throw InvalidParams("macmahon: arguments must be nonnegative");
  return require_integral(detail::box_product(x, y, z), "macmahon");
}

/// Symmetric tilings of B(x,y,z,k); x, y, z, k share a parity.
inline BigInt theorem4(long x, long y, long z, long k) {
  using detail::half;
  detail::require_common("theorem4", x, y, z, k);
  detail::require(detail::even(x - y) && detail::even(y - z) && detail::even(z - k), "theorem4", x, y, z, k,
                  "x, y, z, k must share a parity");
  Rational r = detail::box_product((y + k) / 2, (z - k) / 2, k);
  r *= detail::pochhammer_ratio_product(1, (y - k) / 2, half(x - k), k, 0, k);
  r *= detail::pochhammer_ratio_product(1, (z - k) / 2, half(x + k), (y - k) / 2, k, (y - k) / 2);
  r *= detail::pochhammer_ratio_product(1, (z - k) / 2, half(x + k), (y + k) / 2, k, (y + k) / 2);
  return require_integral(r, "theorem4");
}

/// Symmetric tilings of B'(x,y,z,k) when x, z, k share a parity opposite to y.
inline BigInt theorem5a(long x, long y, long z, long k) {
  using detail::half;
  detail::require_common("theorem5a", x, y, z, k);
  detail::require(detail::even(x - z) && detail::even(z - k) && !detail::even(x - y), "theorem5a", x, y, z, k,
                  "x, z, k must share a parity opposite to y");
  Rational r = detail::box_product((y + k + 1) / 2, (z - k) / 2, k);
  r *= detail::pochhammer_ratio_product(1, (y - k - 1) / 2, half(x - k), k, 0, k);
  r *= detail::pochhammer_ratio_product(1, (z - k) / 2, half(x + k), (y - k - 1) / 2, k, (y - k - 1) / 2);
  r *= detail::pochhammer_ratio_product(1, (z - k) / 2, half(x + k), (y + k + 1) / 2, k, (y + k + 1) / 2);
  return require_integral(r, "theorem5a");
}

namespace detail {

inline void require_5b(const char* name, long x, long y, long z, long k) {
  require_common(name, x, y, z, k);
  require(even(x - z) && even(y - k) && !even(x - y), name, x, y, z, k,
          "x, z must share a parity opposite to y and k");
}

}  // namespace detail

/// The second disconnected-bowtie formula exactly as typeset: the first
/// product starts at i = 0 and the last denominator has length (z+k+1)/2.
/// Not integral in general; kept for comparison only.
inline Rational theorem5b_as_printed(long x, long y, long z, long k) {
  using detail::half;
  detail::require_5b("theorem5b_as_printed", x, y, z, k);
  Rational r = detail::box_product((y + k) / 2, (z - k - 1) / 2, k + 1);
  r *= detail::pochhammer_ratio_product(0, (z - k - 1) / 2, half(x + k + 1), k, k + 1, k);
  r *= detail::pochhammer_ratio_product(1, (y - k) / 2, half(x - k - 1), (z + k + 1) / 2, 0, (z + k + 1) / 2);
  r *= detail::pochhammer_ratio_product(1, (y - k) / 2, half(x + k + 1) + k, (z - k - 1) / 2, 2 * k + 1,
                                        (z + k + 1) / 2);
  return r;
}

/// Symmetric tilings of B'(x,y,z,k) when x, z share a parity opposite to y and k.
/// First product from i = 1; last denominator of length (z-k-1)/2.
inline BigInt theorem5b(long x, long y, long z, long k) {
  using detail::half;
  detail::require_5b("theorem5b", x, y, z, k);
  Rational r = detail::box_product((y + k) / 2, (z - k - 1) / 2, k + 1);
  r *= detail::pochhammer_ratio_product(1, (z - k - 1) / 2, half(x + k + 1), k, k + 1, k);
  r *= detail::pochhammer_ratio_product(1, (y - k) / 2, half(x - k - 1), (z + k + 1) / 2, 0, (z + k + 1) / 2);
  r *= detail::pochhammer_ratio_product(1, (y - k) / 2, half(x + k + 1) + k, (z - k - 1) / 2, 2 * k + 1,
                                        (z - k - 1) / 2);
  return require_integral(r, "theorem5b");
}

/// Self-complementary plane partitions in an x by y by z box, i.e. centrally
/// symmetric tilings of H(x,y,z). Side labels are permuted (every permutation
/// is a symmetry of the hexagon family) so the odd one out sits in the y slot.
inline BigInt stanley_sc(long x, long y, long z) {
  if (x < 0 || y < 0 || z < 0) throw InvalidParams("stanley_sc: arguments must be nonnegative");
  const std::array<long, 3> s{x, y, z};
  int odd = 0;
  for (long v : s) odd += v % 2;
  if (odd == 3) return 0;
  if (odd == 0) return theorem4(x, y, z, 0);
  // Index of the side whose parity differs from the other two.
  const bool lonely_is_odd = odd == 1;
  std::size_t lone = 0;
  for (std::size_t i = 0; i < 3; ++i)
    if ((s[i] % 2 == 1) == lonely_is_odd) lone = i;
  const long a = s[(lone + 1) % 3];
  const long c = s[(lone + 2) % 3];
  return lonely_is_odd ? theorem5a(a, s[lone], c, 0) : theorem5b(a, s[lone], c, 0);
}

/// Closed-form count for a parameter tuple: MacMahon for hexagons (all
/// tilings), the symmetric-count formulas for the holed families.
inline BigInt formula_count(const RegionParams& p) {
  validate(p);
  switch (p.family) {
    case Family::Hexagon: return macmahon(p.x, p.y, p.z);
    case Family::Bowtie: return theorem4(p.x, p.y, p.z, p.k);
    case Family::DisconnectedBowtie:
      if (p.gap != 1) throw InvalidParams(describe(p) + ": no closed form for a widened gap");
      return same_parity(p.k, p.x) ? theorem5a(p.x, p.y, p.z, p.k) : theorem5b(p.x, p.y, p.z, p.k);
  }
  throw InvalidParams("unknown family");
}

}  // namespace lozenge
