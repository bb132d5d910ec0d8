#pragma once

// Brute-force reference implementations for tests. Nothing here calls the
// Buchberger, toric or fan code; only the matrix type, the configuration and
// the monomial ideal container are shared.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "toric/config.hpp"
#include "toric/error.hpp"
#include "toric/exactmath.hpp"
#include "toric/monomial.hpp"
#include "toric/vector.hpp"

namespace toric::oracle {

namespace detail {

/// Column basis of A and the integer data to solve for the basic coordinates
/// from the free ones: v_B = -(K v_N) / det.
struct KernelParam {
  std::vector<std::size_t> basic, free;
  std::vector<std::vector<Integer>> K;  // d x (n-d)
  Integer det;
};

inline KernelParam kernel_param(const ConfigMatrix& A) {
  const std::size_t d = A.d(), n = A.n();
  KernelParam p;
  bool found = false;
  for_each_combination(n, d, [&](const std::vector<std::size_t>& idx) {
    if (det_bareiss(A.matrix().select_columns(idx)) == 0) return true;
    p.basic = idx;
    found = true;
    return false;
  });
  if (!found) fail(ErrorKind::RankDeficient, "no column basis");
  for (std::size_t j = 0, k = 0; j < n; ++j) {
    if (k < d && p.basic[k] == j) {
      ++k;
      continue;
    }
    p.free.push_back(j);
  }
  p.det = det_bareiss(A.matrix().select_columns(p.basic));
  std::vector<RationalVector> AB(d, RationalVector(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) AB[i][k] = Rational(A.matrix()(i, p.basic[k]));
  p.K.assign(d, std::vector<Integer>(p.free.size()));
  for (std::size_t f = 0; f < p.free.size(); ++f) {
    RationalVector col(d);
    for (std::size_t i = 0; i < d; ++i) col[i] = Rational(A.matrix()(i, p.free[f]));
    RationalVector x = *solve_square(AB, col);
    for (std::size_t i = 0; i < d; ++i) {
      Rational s = x[i] * Rational(p.det);
      p.K[i][f] = s.get_num();
    }
  }
  return p;
}

inline Int grading_degree(const IntVec& g, std::span<const Int> v) {
  __int128 s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] > 0) s += static_cast<__int128>(g[i]) * v[i];
  return checked::narrow(s);
}

}  // namespace detail

/// All nonzero v in ker A with deg(v+) <= degbound, one per +/- pair (first
/// nonzero entry positive), sorted. Enumerates the free coordinates over a
/// column basis in a box; each |v_i| is at most the degree because the
/// grading is a positive integer vector constant on fibers.
inline std::vector<LatticeVector> kernel_vectors_up_to(const ConfigMatrix& A, Int degbound,
                                                       std::size_t limit = 5000000) {
  const IntVec& g = A.grading_or_throw();
  detail::KernelParam p = detail::kernel_param(A);
  const std::size_t n = A.n(), m = p.free.size();
  double box = 1;
  for (std::size_t f = 0; f < m; ++f) box *= static_cast<double>(2 * (degbound / g[p.free[f]]) + 1);
  require(box <= static_cast<double>(limit), ErrorKind::LimitExceeded, "kernel enumeration box too large");
  std::vector<LatticeVector> out;
  if (m == 0) return out;
  IntVec vf(m);
  for (std::size_t f = 0; f < m; ++f) vf[f] = -(degbound / g[p.free[f]]);
  for (;;) {
    LatticeVector v(n, 0);
    for (std::size_t f = 0; f < m; ++f) v[p.free[f]] = vf[f];
    bool ok = !is_zero(vf);
    for (std::size_t i = 0; i < p.basic.size() && ok; ++i) {
      Integer s = 0;
      for (std::size_t f = 0; f < m; ++f) s += p.K[i][f] * Integer(static_cast<long>(vf[f]));
      s = -s;
      if (s % p.det != 0) {
        ok = false;
        break;
      }
      Integer q = s / p.det;
      if (abs(q) > degbound) {
        ok = false;
        break;
      }
      v[p.basic[i]] = to_int64(q);
    }
    if (ok && detail::grading_degree(g, v) <= degbound && sign_normalized(v) == v) out.push_back(std::move(v));
    std::size_t f = 0;
    while (f < m && vf[f] == degbound / g[p.free[f]]) {
      vf[f] = -(degbound / g[p.free[f]]);
      ++f;
    }
    if (f == m) break;
    ++vf[f];
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// u is conformal to v: same sign pattern where nonzero and |u_i| <= |v_i|.
inline bool conformal_le(std::span<const Int> u, std::span<const Int> v) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    if ((u[i] > 0) != (v[i] > 0) || v[i] == 0) return false;
    if ((u[i] > 0 ? u[i] : -u[i]) > (v[i] > 0 ? v[i] : -v[i])) return false;
  }
  return true;
}

/// Conformally minimal kernel vectors of degree at most degbound.
inline std::vector<LatticeVector> graver_bruteforce(const ConfigMatrix& A, Int degbound,
                                                    std::size_t limit = 5000000) {
  std::vector<LatticeVector> K = kernel_vectors_up_to(A, degbound, limit);
  std::vector<LatticeVector> out;
  for (const auto& v : K) {
    bool minimal = true;
    for (const auto& u : K) {
      if (u == v) continue;
      if (conformal_le(u, v) || conformal_le(negate(u), v)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(v);
  }
  return out;
}

/// Irredundant decomposition into ideals generated by pure powers.
inline std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& I) {
  const std::size_t n = I.variables();
  require(n <= 4, ErrorKind::LimitExceeded, "irreducible decomposition oracle limited to 4 variables");
  for (std::size_t i = 0; i < n; ++i)
    require(I.max_exponent(i) <= 8, ErrorKind::LimitExceeded, "irreducible decomposition oracle limited to exponent 8");
  std::vector<MonomialIdeal> parts;
  std::vector<MonomialIdeal> todo{I};
  while (!todo.empty()) {
    MonomialIdeal J = todo.back();
    todo.pop_back();
    const Exponents* mixed = nullptr;
    for (const auto& g : J.generators()) {
      std::size_t nz = 0;
      for (Int e : g) nz += e != 0;
      if (nz >= 2) {
        mixed = &g;
        break;
      }
    }
    if (!mixed) {
      parts.push_back(J);
      continue;
    }
    std::size_t i = 0;
    while ((*mixed)[i] == 0) ++i;
    Exponents power(n, 0), rest = *mixed;
    power[i] = (*mixed)[i];
    rest[i] = 0;
    todo.push_back(J.sum(MonomialIdeal(n, {power})));
    todo.push_back(J.sum(MonomialIdeal(n, {rest})));
  }
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  std::vector<MonomialIdeal> out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    bool redundant = false;
    for (std::size_t j = 0; j < parts.size() && !redundant; ++j)
      if (j != k && parts[k].contains(parts[j])) redundant = true;
    if (!redundant) out.push_back(parts[k]);
  }
  return out;
}

/// Supports of the irreducible components.
inline std::vector<std::vector<std::size_t>> assoc_primes_via_decomposition(const MonomialIdeal& I) {
  std::set<std::vector<std::size_t>> s;
  for (const auto& C : irreducible_decomposition(I)) {
    std::vector<std::size_t> supp;
    for (const auto& g : C.generators())
      for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i]) supp.push_back(i);
    std::sort(supp.begin(), supp.end());
    s.insert(supp);
  }
  return {s.begin(), s.end()};
}

/// Initial ideal for a generic weight: leading terms of all Graver vectors.
inline MonomialIdeal initial_ideal_from_graver(const std::vector<LatticeVector>& graver, std::span<const Int> omega) {
  std::vector<Exponents> lead;
  const std::size_t n = omega.size();
  for (const auto& v : graver) {
    __int128 s = 0;
    for (std::size_t i = 0; i < n; ++i) s += static_cast<__int128>(omega[i]) * v[i];
    if (s == 0) fail(ErrorKind::NonGenericOmega, "weight is orthogonal to a Graver vector");
    lead.push_back(s > 0 ? positive_part(v) : negative_part(v));
  }
  return MonomialIdeal(n, std::move(lead));
}

/// Distinct initial ideals for generic integer weights in a box, with the
/// weights fixed to zero on a column basis (every weight class modulo the
/// row space has one such representative). Thin cones may be missed.
inline std::vector<MonomialIdeal> weight_grid_initial_ideals(const ConfigMatrix& A, Int radius, Int degbound,
                                                            std::size_t limit = 1000000) {
  std::vector<LatticeVector> G = graver_bruteforce(A, degbound);
  detail::KernelParam p = detail::kernel_param(A);
  const std::size_t m = p.free.size();
  double box = 1;
  for (std::size_t f = 0; f < m; ++f) box *= static_cast<double>(2 * radius + 1);
  require(box <= static_cast<double>(limit), ErrorKind::LimitExceeded, "weight grid too large");
  std::set<MonomialIdeal> found;
  IntVec w(m, -radius);
  for (;;) {
    IntVec omega(A.n(), 0);
    for (std::size_t f = 0; f < m; ++f) omega[p.free[f]] = w[f];
    bool generic = std::all_of(G.begin(), G.end(), [&](const LatticeVector& v) { return dot(omega, v) != 0; });
    if (generic) found.insert(initial_ideal_from_graver(G, omega));
    std::size_t f = 0;
    while (f < m && w[f] == radius) w[f++] = -radius;
    if (f == m) break;
    ++w[f];
  }
  return {found.begin(), found.end()};
}

/// Normal form by one elementary reduction step at a time.
inline Exponents single_step_normal_form(Exponents u, const std::vector<std::pair<Exponents, Exponents>>& G) {
  for (;;) {
    bool stepped = false;
    for (const auto& [head, tail] : G) {
      bool div = true;
      for (std::size_t i = 0; i < u.size() && div; ++i) div = head[i] <= u[i];
      if (!div) continue;
      for (std::size_t i = 0; i < u.size(); ++i) u[i] = u[i] - head[i] + tail[i];
      stepped = true;
      break;
    }
    if (!stepped) return u;
  }
}

}  // namespace toric::oracle
