#pragma once

// Small-integer vectors used for exponents and lattice vectors. Entries are
// int64 and every arithmetic step is overflow-checked; an overflow raises
// ErrorKind::Overflow instead of wrapping.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "toric/error.hpp"

namespace toric {

using Int = std::int64_t;
using IntVec = std::vector<Int>;
/// Element of ker_Z(A).
using LatticeVector = IntVec;
/// Element of N^n.
using Exponents = IntVec;

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "int64 addition overflow");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorKind::Overflow, "int64 subtraction overflow");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "int64 multiplication overflow");
  return r;
}

inline Int narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) fail(ErrorKind::Overflow, "value does not fit in int64");
  return static_cast<Int>(v);
}

}  // namespace checked

inline void require_same_size(std::span<const Int> a, std::span<const Int> b) {
  require(a.size() == b.size(), ErrorKind::DimensionMismatch,
          "vector lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
}

inline IntVec add(std::span<const Int> a, std::span<const Int> b) {
  require_same_size(a, b);
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked::add(a[i], b[i]);
  return r;
}

inline IntVec sub(std::span<const Int> a, std::span<const Int> b) {
  require_same_size(a, b);
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked::sub(a[i], b[i]);
  return r;
}

inline IntVec negate(std::span<const Int> a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked::sub(0, a[i]);
  return r;
}

inline __int128 dot(std::span<const Int> a, std::span<const Int> b) {
  require_same_size(a, b);
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  return s;
}

inline bool is_zero(std::span<const Int> a) {
  return std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; });
}

inline bool is_nonnegative(std::span<const Int> a) {
  return std::all_of(a.begin(), a.end(), [](Int x) { return x >= 0; });
}

/// v+ = componentwise max(v, 0).
inline Exponents positive_part(std::span<const Int> v) {
  Exponents r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] > 0 ? v[i] : 0;
  return r;
}

/// v- = componentwise max(-v, 0).
inline Exponents negative_part(std::span<const Int> v) {
  Exponents r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] < 0 ? checked::sub(0, v[i]) : 0;
  return r;
}

inline Int total_degree(std::span<const Int> u) {
  Int s = 0;
  for (Int x : u) s = checked::add(s, x);
  return s;
}

inline Int l1_norm(std::span<const Int> v) {
  Int s = 0;
  for (Int x : v) s = checked::add(s, x < 0 ? checked::sub(0, x) : x);
  return s;
}

/// Componentwise a <= b, i.e. x^a divides x^b.
inline bool divides(std::span<const Int> a, std::span<const Int> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exponents monomial_lcm(std::span<const Int> a, std::span<const Int> b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline bool disjoint_support(std::span<const Int> a, std::span<const Int> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

inline Int content(std::span<const Int> v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

/// Divides out the gcd of the entries; zero stays zero.
inline IntVec primitive(std::span<const Int> v) {
  IntVec r(v.begin(), v.end());
  Int g = content(v);
  if (g > 1)
    for (Int& x : r) x /= g;
  return r;
}

/// Flips the sign so that the first nonzero entry is positive. Used to pick one
/// representative per +/- pair in unoriented listings.
inline IntVec sign_normalized(std::span<const Int> v) {
  IntVec r(v.begin(), v.end());
  auto it = std::find_if(r.begin(), r.end(), [](Int x) { return x != 0; });
  if (it != r.end() && *it < 0)
    for (Int& x : r) x = checked::sub(0, x);
  return r;
}

/// Sign-normalizes, sorts and dedups a list of vectors.
inline std::vector<IntVec> canonical_set(std::vector<IntVec> vs) {
  for (auto& v : vs) v = sign_normalized(v);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

/// Bitmask of nonzero positions (first 64 coordinates only); a cheap
/// necessary condition for divisibility.
inline std::uint64_t support_mask(std::span<const Int> v) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < v.size() && i < 64; ++i)
    if (v[i] != 0) m |= (std::uint64_t{1} << i);
  return m;
}

inline std::string to_string(std::span<const Int> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace toric
