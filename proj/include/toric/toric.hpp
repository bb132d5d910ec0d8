#pragma once

// Toric ideals of a configuration: generators by saturation, Graver bases via
// the Lawrence lifting, circuits, degree bounds and universal Groebner bases.

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "toric/buchberger.hpp"
#include "toric/config.hpp"
#include "toric/error.hpp"
#include "toric/exactmath.hpp"
#include "toric/monomial.hpp"
#include "toric/orders.hpp"
#include "toric/vector.hpp"

namespace toric {

namespace detail {

inline BuchbergerOptions all_saturated(std::size_t n, const Limits& limits) {
  BuchbergerOptions o;
  o.saturated.assign(n, true);
  o.limits = limits;
  return o;
}

}  // namespace detail

/// Generators of J : x_i^oo where J is the ideal of the given lattice vectors
/// (all of them in ker A). One Groebner computation under graded reverse
/// lexicographic order with x_i cheapest, then the common x_i power of every
/// element is divided out. Common factors in other variables are cancelled
/// as well; the result stays inside I_A, so sequential saturation still ends
/// at I_A.
inline std::vector<LatticeVector> saturate_variable(const ConfigMatrix& A, const std::vector<LatticeVector>& gens,
                                                    std::size_t i, const Limits& limits = {}) {
  require(i < A.n(), ErrorKind::InvalidArgument, "variable index out of range");
  for (const auto& v : gens) require(A.in_kernel(v), ErrorKind::InvalidArgument, "generator not in ker A");
  TermOrder ord = TermOrder::revlex_last(A.grading_or_throw(), i);
  GroebnerBasis gb = buchberger(gens, ord, detail::all_saturated(A.n(), limits));
  return canonical_set(gb.vectors());
}

/// Reduced Groebner basis of I_A for graded reverse lexicographic order
/// (grading weight, x_1 > ... > x_n).
inline GroebnerBasis toric_ideal_basis(const ConfigMatrix& A, const Limits& limits = {}) {
  std::vector<LatticeVector> gens = kernel_lattice_basis(A.matrix());
  const IntVec& g = A.grading_or_throw();
  for (std::size_t i = 0; i < A.n(); ++i) gens = saturate_variable(A, gens, i, limits);
  return buchberger(gens, TermOrder::revlex_last(g, A.n() - 1), detail::all_saturated(A.n(), limits));
}

/// Vectors whose binomials generate I_A (a reduced Groebner basis), one per
/// +/- pair, sorted.
inline std::vector<LatticeVector> toric_generators(const ConfigMatrix& A, const Limits& limits = {}) {
  A.require_pointed();
  return canonical_set(toric_ideal_basis(A, limits).vectors());
}

/// Reduced Groebner basis of I_A for an arbitrary term order, starting from
/// known generators.
inline GroebnerBasis groebner_basis(const ConfigMatrix& A, const std::vector<LatticeVector>& generators,
                                    const TermOrder& ord, const Limits& limits = {}) {
  require(ord.size() == A.n(), ErrorKind::DimensionMismatch, "order length differs from column count");
  require(ord.weight_nonnegative() || A.pointed(), ErrorKind::InvalidArgument,
          "negative weights require a positively graded configuration");
  return buchberger(generators, ord, detail::all_saturated(A.n(), limits));
}

inline GroebnerBasis groebner_basis(const ConfigMatrix& A, const TermOrder& ord, const Limits& limits = {}) {
  return groebner_basis(A, toric_generators(A, limits), ord, limits);
}

/// Lambda(A) = [[A, 0], [I, I]].
inline IntMatrix lawrence_lifting(const IntMatrix& A) {
  const std::size_t d = A.rows(), n = A.cols();
  IntMatrix L(d + n, 2 * n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < n; ++j) L(i, j) = A(i, j);
  for (std::size_t j = 0; j < n; ++j) {
    L(d + j, j) = 1;
    L(d + j, n + j) = 1;
  }
  return L;
}

/// Graver basis, one per +/- pair, sorted. Read off a reduced Groebner basis
/// of the Lawrence lifting.
inline std::vector<LatticeVector> graver(const ConfigMatrix& A, const Limits& limits = {}) {
  A.require_pointed();
  const std::size_t n = A.n();
  ConfigMatrix L(lawrence_lifting(A.matrix()));
  GroebnerBasis gb = toric_ideal_basis(L, limits);
  std::vector<LatticeVector> out;
  for (const auto& w : gb.vectors()) {
    LatticeVector u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n));
    for (std::size_t j = 0; j < n; ++j)
      if (w[n + j] != -w[j]) fail(ErrorKind::Internal, "Lawrence basis element not of the form x^u y^v - x^v y^u");
    out.push_back(std::move(u));
  }
  return canonical_set(std::move(out));
}

/// Degree of x^(u+) y^(u-) - x^(u-) y^(u+) in the Lawrence lifting, i.e. |u|_1.
inline Int lawrence_degree(std::span<const Int> u) { return l1_norm(u); }

namespace detail {

/// [ (L tensor Q) cap Z^m : L ] for the lattice L spanned by `gens`.
inline Integer saturation_index(const std::vector<IntVec>& gens, std::size_t m) {
  if (gens.empty()) return 1;
  HermiteForm h = hnf(IntMatrix::from_rows(gens));
  if (h.rank == 0) return 1;
  std::vector<std::size_t> top(h.rank);
  for (std::size_t i = 0; i < h.rank; ++i) top[i] = i;
  IntMatrix basis = h.H.select_rows(top);
  if (h.rank == m) return abs(det_bareiss(basis));
  // The saturation is the kernel of the kernel; compare covolumes.
  std::vector<LatticeVector> perp = kernel_lattice_basis(basis);
  std::vector<LatticeVector> sat = kernel_lattice_basis(IntMatrix::from_rows(perp));
  IntMatrix S = IntMatrix::from_rows(sat);
  Integer gl = det_bareiss(basis * basis.transpose());
  Integer gs = det_bareiss(S * S.transpose());
  Integer q = gl / gs;
  Integer r = sqrt(q);
  if (r * r != q || q * gs != gl) fail(ErrorKind::Internal, "saturation index is not an integer");
  return r;
}

/// Coordinates of the columns of A in a basis of the lattice they span.
inline std::vector<IntVec> column_coordinates(const ConfigMatrix& A) {
  HermiteForm h = hnf(A.matrix().transpose());
  std::vector<RationalVector> Bt(A.d(), RationalVector(A.d()));
  for (std::size_t i = 0; i < A.d(); ++i)
    for (std::size_t k = 0; k < A.d(); ++k) Bt[i][k] = Rational(h.H(k, i));
  std::vector<IntVec> coords;
  for (std::size_t j = 0; j < A.n(); ++j) {
    RationalVector rhs(A.d());
    for (std::size_t i = 0; i < A.d(); ++i) rhs[i] = Rational(A.matrix()(i, j));
    auto c = solve_square(Bt, rhs);
    if (!c) fail(ErrorKind::Internal, "column lattice basis is singular");
    IntVec ci(A.d());
    for (std::size_t i = 0; i < A.d(); ++i) {
      if ((*c)[i].get_den() != 1) fail(ErrorKind::Internal, "column not in its own lattice");
      ci[i] = to_int64((*c)[i].get_num());
    }
    coords.push_back(std::move(ci));
  }
  return coords;
}

}  // namespace detail

struct Circuit {
  LatticeVector vector;
  /// Index of the lattice spanned by the support columns inside the part of
  /// ZA in their linear span. The minor formula with exactly d+1 columns
  /// produces index * vector (when ZA = Z^d).
  Integer index = 1;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

inline std::vector<std::size_t> support(std::span<const Int> v) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.push_back(i);
  return s;
}

inline bool is_circuit(const ConfigMatrix& A, std::span<const Int> u) {
  if (u.size() != A.n() || is_zero(u) || !A.in_kernel(u) || content(u) != 1) return false;
  std::vector<std::size_t> s = support(u);
  return rank(A.matrix().select_columns(s)) + 1 == s.size();
}

inline Integer circuit_index(const ConfigMatrix& A, std::span<const Int> u) {
  require(is_circuit(A, u), ErrorKind::NotACircuit, "vector " + to_string(u) + " is not a circuit");
  std::vector<IntVec> coords = detail::column_coordinates(A);
  std::vector<IntVec> gens;
  for (std::size_t j : support(u)) gens.push_back(coords[j]);
  return detail::saturation_index(gens, A.d());
}

/// All circuits, one per +/- pair, sorted by vector. Each (d+1)-subset of
/// columns of full rank yields the alternating vector of its d-minors.
inline std::vector<Circuit> circuits(const ConfigMatrix& A) {
  const std::size_t d = A.d(), n = A.n();
  std::vector<LatticeVector> found;
  for_each_combination(n, std::min(d + 1, n), [&](const std::vector<std::size_t>& S) {
    if (S.size() != d + 1) return false;
    std::vector<Integer> raw(S.size());
    bool nonzero = false;
    for (std::size_t j = 0; j < S.size(); ++j) {
      std::vector<std::size_t> rest;
      for (std::size_t k = 0; k < S.size(); ++k)
        if (k != j) rest.push_back(S[k]);
      raw[j] = det_bareiss(A.matrix().select_columns(rest));
      if (j % 2 == 1) raw[j] = -raw[j];
      if (raw[j] != 0) nonzero = true;
    }
    if (!nonzero) return true;
    Integer g = 0;
    for (const auto& x : raw) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    LatticeVector u(n, 0);
    for (std::size_t j = 0; j < S.size(); ++j) u[S[j]] = to_int64(raw[j] / g);
    found.push_back(std::move(u));
    return true;
  });
  found = canonical_set(std::move(found));
  std::vector<IntVec> coords = detail::column_coordinates(A);
  std::vector<Circuit> out;
  for (auto& u : found) {
    if (!A.in_kernel(u)) fail(ErrorKind::Internal, "minor vector not in the kernel");
    std::vector<IntVec> gens;
    for (std::size_t j : support(u)) gens.push_back(coords[j]);
    out.push_back({std::move(u), detail::saturation_index(gens, d)});
  }
  return out;
}

/// index * deg(u+): the degree of the minor-formula vector before dividing by
/// its content.
inline Integer true_degree(const Circuit& c, const ConfigMatrix& A) {
  require(is_circuit(A, c.vector), ErrorKind::NotACircuit, "vector " + to_string(c.vector) + " is not a circuit");
  return c.index * Integer(static_cast<long>(A.degree(c.vector)));
}

/// (n-d)(d+1) D(A)
inline Integer degree_bound(const ConfigMatrix& A) {
  return Integer(static_cast<long>(A.n() - A.d())) * Integer(static_cast<long>(A.d() + 1)) *
         max_abs_minor(A.matrix());
}

/// All nonzero maximal minors share one absolute value.
inline bool is_unimodular(const ConfigMatrix& A) {
  Integer value = 0;
  bool ok = true;
  for_each_combination(A.n(), A.d(), [&](const std::vector<std::size_t>& idx) {
    Integer m = abs(det_bareiss(A.matrix().select_columns(idx)));
    if (m == 0) return true;
    if (value == 0) value = m;
    ok = m == value;
    return ok;
  });
  return ok;
}

struct UniversalOptions {
  std::size_t max_graver = 22;
  unsigned threads = 1;
  Limits limits;
};

struct UniversalResult {
  std::vector<LatticeVector> ugb;
  /// Sorted by initial ideal; witnesses[k] lies in the interior of the cone of
  /// bases[k] and is positive.
  std::vector<MonomialIdeal> initial_ideals;
  std::vector<IntVec> witnesses;
  std::vector<GroebnerBasis> bases;
};

namespace detail {

/// Interior points, one per full-dimensional region of the arrangement of
/// hyperplanes orthogonal to `normals`, by depth-first search over sign
/// patterns with infeasible prefixes pruned.
inline std::vector<IntVec> arrangement_regions(const std::vector<LatticeVector>& normals, std::size_t n) {
  std::vector<IntVec> out;
  std::vector<LatticeVector> system;
  std::function<void(std::size_t, const IntVec&)> dfs = [&](std::size_t k, const IntVec& omega) {
    if (k == normals.size()) {
      out.push_back(omega);
      return;
    }
    for (int s : {1, -1}) {
      LatticeVector g = s > 0 ? normals[k] : negate(normals[k]);
      system.push_back(g);
      if (dot(g, omega) > 0) {
        dfs(k + 1, omega);
      } else if (auto w = strict_feasible(system, n)) {
        dfs(k + 1, clear_denominators(*w));
      }
      system.pop_back();
    }
  };
  dfs(0, IntVec(n, 0));
  return out;
}

inline bool strictly_inside(const GroebnerBasis& gb, std::span<const Int> omega) {
  for (const auto& b : gb.elements())
    if (dot(omega, b.vector()) <= 0) return false;
  return true;
}

}  // namespace detail

/// Every reduced Groebner basis of I_A, found by visiting one weight in each
/// region cut out by the Graver hyperplanes (the Groebner fan is coarser).
inline UniversalResult universal_gb(const ConfigMatrix& A, const UniversalOptions& opts = {}) {
  A.require_pointed();
  std::vector<LatticeVector> gr = graver(A, opts.limits);
  require(gr.size() <= opts.max_graver, ErrorKind::LimitExceeded,
          "Graver basis has " + std::to_string(gr.size()) + " elements, limit " + std::to_string(opts.max_graver));
  std::vector<LatticeVector> gens = toric_generators(A, opts.limits);
  std::vector<IntVec> regions = detail::arrangement_regions(gr, A.n());

  std::vector<GroebnerBasis> bases;
  std::vector<IntVec> witnesses;
  const unsigned threads = std::max(1u, opts.threads);
  std::size_t next = 0;
  while (next < regions.size()) {
    // Pick up to `threads` witnesses that are not inside a known cone.
    std::vector<IntVec> batch;
    for (; next < regions.size() && batch.size() < threads; ++next) {
      const IntVec& w = regions[next];
      bool known = std::any_of(bases.begin(), bases.end(), [&](const GroebnerBasis& b) {
        return detail::strictly_inside(b, w);
      });
      if (!known) batch.push_back(A.positive_representative(w));
    }
    std::vector<GroebnerBasis> results(batch.size());
    auto work = [&](std::size_t k) {
      results[k] = groebner_basis(A, gens, TermOrder::weighted(batch[k], Tiebreak::DegRevLex), opts.limits);
    };
    if (batch.size() <= 1 || threads == 1) {
      for (std::size_t k = 0; k < batch.size(); ++k) work(k);
    } else {
      std::vector<std::thread> pool;
      std::exception_ptr err;
      std::mutex m;
      for (std::size_t k = 0; k < batch.size(); ++k)
        pool.emplace_back([&, k] {
          try {
            work(k);
          } catch (...) {
            std::lock_guard lock(m);
            if (!err) err = std::current_exception();
          }
        });
      for (auto& t : pool) t.join();
      if (err) std::rethrow_exception(err);
    }
    for (std::size_t k = 0; k < batch.size(); ++k) {
      bool dup = std::any_of(bases.begin(), bases.end(),
                             [&](const GroebnerBasis& b) { return b.elements() == results[k].elements(); });
      if (dup) continue;
      bases.push_back(std::move(results[k]));
      witnesses.push_back(batch[k]);
    }
  }

  std::vector<std::size_t> perm(bases.size());
  std::vector<MonomialIdeal> ideals;
  for (std::size_t k = 0; k < bases.size(); ++k) {
    perm[k] = k;
    ideals.emplace_back(A.n(), bases[k].leading_terms());
  }
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return ideals[a] < ideals[b]; });

  UniversalResult r;
  std::vector<LatticeVector> all;
  for (std::size_t k : perm) {
    r.initial_ideals.push_back(ideals[k]);
    r.witnesses.push_back(witnesses[k]);
    for (const auto& v : bases[k].vectors()) all.push_back(v);
    r.bases.push_back(std::move(bases[k]));
  }
  r.ugb = canonical_set(std::move(all));
  return r;
}

}  // namespace toric
