#pragma once

// Shared fixtures for the unit tests and the acceptance runner.

#include <random>
#include <set>
#include <vector>

#include "toric/all.hpp"

namespace toric::fixtures {

inline IntMatrix twisted_cubic() { return IntMatrix{{1, 1, 1, 1}, {0, 1, 2, 3}}; }

inline IntMatrix rational_normal_conic() { return IntMatrix{{1, 1, 1}, {0, 1, 2}}; }

inline IntMatrix five_facet_curve() { return IntMatrix{{15, 247, 248, 345}}; }

inline IntMatrix p2xp2() { return gen::segre({3, 3}); }

/// The 2 x 5 matrix whose Lawrence lifting carries the degree counterexample.
inline IntMatrix counterexample_base() { return IntMatrix{{1, 3, 4, 6, 0}, {0, 0, 0, -5, 1}}; }

/// Graver basis of the lifted counterexample, as the base half u of (u, -u).
/// The first six are its circuits; the sixth has true degree 30.
inline std::vector<IntVec> counterexample_graver_halves() {
  return {{-3, 1, 0, 0, 0},  {-4, 0, 1, 0, 0},  {0, -4, 3, 0, 0},   {0, -2, 0, 1, 5},
          {-6, 0, 0, 1, 5},  {0, 0, -3, 2, 10}, {-2, 0, -1, 1, 5},  {-3, -1, 0, 1, 5},
          {-1, -1, 1, 0, 0}, {1, -1, -1, 1, 5}, {0, 2, -3, 1, 5},   {1, -3, 2, 0, 0},
          {2, -2, 1, 0, 0},  {-1, 1, -2, 1, 5}, {2, 0, -2, 1, 5},   {-1, -1, -2, 2, 10}};
}

inline IntVec lift(const IntVec& u) {
  IntVec v = u;
  for (Int x : u) v.push_back(-x);
  return v;
}

inline std::vector<IntVec> lifted(const std::vector<IntVec>& halves) {
  std::vector<IntVec> out;
  for (const auto& u : halves) out.push_back(lift(u));
  return canonical_set(out);
}

/// 2x2 minors x_a x_b - x_c x_e of a matrix of variable indices, as vectors.
inline std::vector<IntVec> two_by_two_minors(const std::vector<std::vector<std::size_t>>& M, std::size_t n) {
  std::vector<IntVec> out;
  for (std::size_t r1 = 0; r1 < M.size(); ++r1)
    for (std::size_t r2 = r1 + 1; r2 < M.size(); ++r2)
      for (std::size_t c1 = 0; c1 < M[0].size(); ++c1)
        for (std::size_t c2 = c1 + 1; c2 < M[0].size(); ++c2) {
          IntVec v(n, 0);
          ++v[M[r1][c1]];
          ++v[M[r2][c2]];
          --v[M[r1][c2]];
          --v[M[r2][c1]];
          if (!is_zero(v)) out.push_back(v);
        }
  return out;
}

/// Quadrics of the 3x3x3 Segre embedding from its two 3 x 9 flattenings.
/// Variable x_ijk sits at column 9i + 3j + k.
inline std::vector<IntVec> segre333_flattening_minors() {
  std::vector<std::vector<std::size_t>> f1(3, std::vector<std::size_t>(9)), f2(3, std::vector<std::size_t>(9));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        f1[i][3 * j + k] = 9 * i + 3 * j + k;
        f2[k][3 * i + j] = 9 * i + 3 * j + k;
      }
  auto a = two_by_two_minors(f1, 27);
  auto b = two_by_two_minors(f2, 27);
  a.insert(a.end(), b.begin(), b.end());
  return canonical_set(a);
}

/// Random pointed full-rank configuration, d <= 3, n <= 6, entries in [0,5].
inline ConfigMatrix random_config(std::mt19937_64& rng, std::size_t max_d = 3, std::size_t max_n = 6) {
  std::uniform_int_distribution<int> entry(0, 5);
  for (;;) {
    std::size_t d = std::uniform_int_distribution<std::size_t>(1, max_d)(rng);
    std::size_t n = std::uniform_int_distribution<std::size_t>(d + 1, max_n)(rng);
    IntMatrix M(d, n);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < n; ++j) M(i, j) = entry(rng);
    if (rank(M) != d) continue;
    ConfigMatrix A(M);
    if (A.pointed()) return A;
  }
}

inline IntVec random_weight(std::mt19937_64& rng, std::size_t n, Int hi = 20) {
  std::uniform_int_distribution<Int> w(0, hi);
  IntVec out(n);
  for (auto& x : out) x = w(rng);
  return out;
}

/// Weight vector off every hyperplane orthogonal to a vector of `G`.
inline IntVec random_generic_weight(std::mt19937_64& rng, std::size_t n, const std::vector<IntVec>& G,
                                    Int hi = 50) {
  for (;;) {
    IntVec w = random_weight(rng, n, hi);
    bool ok = true;
    for (const auto& g : G) ok = ok && dot(w, g) != 0;
    if (ok) return w;
  }
}

inline bool subset_of(const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
  std::set<IntVec> s(b.begin(), b.end());
  for (const auto& v : a)
    if (!s.count(sign_normalized(v))) return false;
  return true;
}

/// Standard degree max(|u+|, |u-|).
inline Int standard_degree(std::span<const Int> v) {
  return std::max(total_degree(positive_part(v)), total_degree(negative_part(v)));
}

}  // namespace toric::fixtures
