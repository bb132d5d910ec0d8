#pragma once

// Integer programs min { omega.x : Ax = b, x in N^n } solved by normal forms,
// fiber enumeration for small instances, skeleton graphs and test sets.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <vector>

#include "toric/buchberger.hpp"
#include "toric/config.hpp"
#include "toric/error.hpp"
#include "toric/exactmath.hpp"
#include "toric/orders.hpp"
#include "toric/toric.hpp"
#include "toric/vector.hpp"

namespace toric {

struct IPInstance {
  ConfigMatrix A;
  RationalVector omega;
  /// Right-hand side for A.original().
  IntVec b;
  Tiebreak tiebreak = Tiebreak::DegRevLex;

  IPInstance(ConfigMatrix a, RationalVector w, IntVec rhs, Tiebreak tb = Tiebreak::DegRevLex)
      : A(std::move(a)), omega(std::move(w)), b(std::move(rhs)), tiebreak(tb) {
    require(omega.size() == A.n(), ErrorKind::DimensionMismatch,
            "cost vector has " + std::to_string(omega.size()) + " entries, expected " + std::to_string(A.n()));
    require(b.size() == A.original().rows(), ErrorKind::DimensionMismatch,
            "right-hand side has " + std::to_string(b.size()) + " entries, expected " +
                std::to_string(A.original().rows()));
  }

  TermOrder order() const { return A.order(omega, tiebreak); }

  Rational cost(std::span<const Int> x) const {
    Rational c = 0;
    for (std::size_t i = 0; i < x.size(); ++i) c += omega[i] * Rational(static_cast<long>(x[i]));
    return c;
  }
};

constexpr std::size_t kDefaultFiberLimit = 200000;

namespace detail {

inline void require_fiber_guard(const ConfigMatrix& A) {
  const IntMatrix& M = A.original();
  require(!M.has_negative_entry(), ErrorKind::GuardViolated, "fiber enumeration needs a nonnegative matrix");
  for (std::size_t j = 0; j < M.cols(); ++j) {
    bool nonzero = false;
    for (std::size_t i = 0; i < M.rows(); ++i) nonzero = nonzero || M(i, j) != 0;
    require(nonzero, ErrorKind::GuardViolated, "fiber enumeration needs every column nonzero");
  }
}

/// Depth-first search over x_0, x_1, ... with remaining right-hand side.
/// `visit` returns false to stop.
inline void enumerate_fiber(const ConfigMatrix& A, std::span<const Int> b,
                            const std::function<bool(const Exponents&)>& visit) {
  require_fiber_guard(A);
  const IntMatrix& M = A.original();
  const std::size_t d = M.rows(), n = M.cols();
  require(b.size() == d, ErrorKind::DimensionMismatch, "right-hand side length differs from row count");
  if (!is_nonnegative(b)) return;
  std::vector<IntVec> cols = M.transpose().to_int_rows();
  // covered[k][j]: some variable >= k has a positive entry in row j
  std::vector<std::vector<char>> covered(n + 1, std::vector<char>(d, 0));
  for (std::size_t k = n; k-- > 0;)
    for (std::size_t j = 0; j < d; ++j) covered[k][j] = covered[k + 1][j] || cols[k][j] > 0;
  IntVec rest(b.begin(), b.end());
  Exponents x(n, 0);
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (stop) return;
    for (std::size_t j = 0; j < d; ++j)
      if (rest[j] > 0 && !covered[k][j]) return;
    if (k == n) {
      if (!visit(x)) stop = true;
      return;
    }
    Int ub = -1;
    for (std::size_t j = 0; j < d; ++j)
      if (cols[k][j] > 0) {
        Int q = rest[j] / cols[k][j];
        if (ub < 0 || q < ub) ub = q;
      }
    for (Int v = 0; v <= ub && !stop; ++v) {
      x[k] = v;
      for (std::size_t j = 0; j < d; ++j) rest[j] -= v * cols[k][j];
      rec(k + 1);
      for (std::size_t j = 0; j < d; ++j) rest[j] += v * cols[k][j];
    }
    x[k] = 0;
  };
  rec(0);
}

}  // namespace detail

/// Some x in N^n with Ax = b, or nullopt.
inline std::optional<Exponents> feasible_point(const ConfigMatrix& A, std::span<const Int> b) {
  std::optional<Exponents> found;
  detail::enumerate_fiber(A, b, [&](const Exponents& x) {
    found = x;
    return false;
  });
  return found;
}

/// The whole fiber { x in N^n : Ax = b }, sorted.
inline std::vector<Exponents> fiber(const ConfigMatrix& A, std::span<const Int> b,
                                   std::size_t limit = kDefaultFiberLimit) {
  std::vector<Exponents> out;
  detail::enumerate_fiber(A, b, [&](const Exponents& x) {
    require(out.size() < limit, ErrorKind::LimitExceeded,
            "fiber has more than " + std::to_string(limit) + " points");
    out.push_back(x);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// Optimum as the normal form of a feasible point modulo the reduced
/// Groebner basis `G` of the instance order.
inline std::optional<Exponents> solve_ip(const IPInstance& inst, const GroebnerBasis& G) {
  inst.A.require_pointed();
  auto start = feasible_point(inst.A, inst.b);
  if (!start) return std::nullopt;
  return normal_form(*start, G);
}

inline std::optional<Exponents> solve_ip(const IPInstance& inst) {
  inst.A.require_pointed();
  auto start = feasible_point(inst.A, inst.b);
  if (!start) return std::nullopt;
  return normal_form(*start, groebner_basis(inst.A, inst.order()));
}

/// Elimination route: reduce t^b modulo the ideal <x_i - t^(a_i)> under an
/// order where every t is more expensive than any x. An x-only remainder is
/// the optimum; a remainder containing t certifies infeasibility.
inline std::optional<Exponents> solve_ip_elimination(const IPInstance& inst) {
  const IntMatrix& M = inst.A.original();
  require(!M.has_negative_entry(), ErrorKind::NegativeEntries,
          "elimination needs a nonnegative matrix; use the reduction method");
  inst.A.require_pointed();
  const std::size_t d = M.rows(), n = M.cols();
  if (!is_nonnegative(inst.b)) return std::nullopt;

  // The grading is constant on fibers, so shifting the cost by it keeps the
  // optimum and makes every x weight positive.
  IntVec w = inst.A.positive_representative(clear_denominators(inst.omega));
  TermOrder ord;
  ord.weight.assign(d + n, 0);
  for (std::size_t i = 0; i < n; ++i) ord.weight[d + i] = w[i];
  ord.tiebreak = inst.tiebreak;
  ord.permutation.resize(d + n);
  std::iota(ord.permutation.begin(), ord.permutation.end(), std::size_t{0});
  ord.elimination_block = d;

  std::vector<LatticeVector> gens;
  for (std::size_t i = 0; i < n; ++i) {
    LatticeVector v(d + n, 0);
    for (std::size_t j = 0; j < d; ++j) v[j] = -to_int64(M(j, i));
    v[d + i] = 1;
    gens.push_back(std::move(v));
  }
  BuchbergerOptions opts;
  opts.saturated.assign(d + n, true);
  GroebnerBasis G = buchberger(gens, ord, opts);

  Exponents tb(d + n, 0);
  for (std::size_t j = 0; j < d; ++j) tb[j] = inst.b[j];
  Exponents nf = normal_form(tb, G);
  for (std::size_t j = 0; j < d; ++j)
    if (nf[j] != 0) return std::nullopt;
  return Exponents(nf.begin() + static_cast<std::ptrdiff_t>(d), nf.end());
}

/// Directed graph on a fiber: v -> u when v - u is an oriented basis vector.
struct SkeletonGraph {
  std::vector<Exponents> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::vector<std::vector<std::size_t>> out_adjacency() const {
    std::vector<std::vector<std::size_t>> adj(vertices.size());
    for (auto [a, b] : edges) adj[a].push_back(b);
    return adj;
  }

  bool is_connected() const {
    if (vertices.empty()) return true;
    std::vector<std::vector<std::size_t>> adj(vertices.size());
    for (auto [a, b] : edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::vector<char> seen(vertices.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t u : adj[v])
        if (!seen[u]) {
          seen[u] = 1;
          ++count;
          stack.push_back(u);
        }
    }
    return count == vertices.size();
  }

  bool is_acyclic() const {
    std::vector<std::size_t> indeg(vertices.size(), 0);
    for (auto e : edges) ++indeg[e.second];
    auto adj = out_adjacency();
    std::queue<std::size_t> q;
    for (std::size_t v = 0; v < vertices.size(); ++v)
      if (indeg[v] == 0) q.push(v);
    std::size_t seen = 0;
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop();
      ++seen;
      for (std::size_t u : adj[v])
        if (--indeg[u] == 0) q.push(u);
    }
    return seen == vertices.size();
  }

  std::vector<std::size_t> sinks() const {
    std::vector<char> has_out(vertices.size(), 0);
    for (auto e : edges) has_out[e.first] = 1;
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < vertices.size(); ++v)
      if (!has_out[v]) out.push_back(v);
    return out;
  }

  /// The sink when there is exactly one.
  std::optional<Exponents> unique_sink() const {
    auto s = sinks();
    if (s.size() != 1) return std::nullopt;
    return vertices[s[0]];
  }
};

inline SkeletonGraph skeleton_graph(const IPInstance& inst, const GroebnerBasis& G,
                                    std::size_t limit = kDefaultFiberLimit) {
  SkeletonGraph g;
  g.vertices = fiber(inst.A, inst.b, limit);
  std::map<Exponents, std::size_t> index;
  for (std::size_t k = 0; k < g.vertices.size(); ++k) index.emplace(g.vertices[k], k);
  for (std::size_t k = 0; k < g.vertices.size(); ++k) {
    for (const auto& e : G.elements()) {
      if (!divides(e.head, g.vertices[k])) continue;
      Exponents u = add(sub(g.vertices[k], e.head), e.tail);
      auto it = index.find(u);
      if (it == index.end()) fail(ErrorKind::Internal, "basis step left the fiber");
      g.edges.emplace_back(k, it->second);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

/// Checks the two test-set conditions literally on every supplied fiber:
/// (a) each non-optimal point v has some w in T with v - w feasible and
///     smaller; (b) u - w is infeasible at the optimum u for every w in T.
inline bool is_test_set(const std::vector<LatticeVector>& T, const ConfigMatrix& A, const RationalVector& omega,
                        const std::vector<IntVec>& rhs, Tiebreak tb = Tiebreak::DegRevLex,
                        std::size_t limit = kDefaultFiberLimit) {
  for (const auto& w : T) require(A.in_kernel(w), ErrorKind::InvalidArgument, "test-set vector not in ker A");
  TermOrder ord = A.order(omega, tb);
  for (const auto& b : rhs) {
    std::vector<Exponents> F = fiber(A, b, limit);
    if (F.empty()) continue;
    const Exponents* opt = &F[0];
    for (const auto& x : F)
      if (ord.compare(x, *opt) == Ordering::Less) opt = &x;
    for (const auto& v : F) {
      if (&v == opt) {
        for (const auto& w : T)
          if (is_nonnegative(sub(v, w))) return false;
        continue;
      }
      bool improves = std::any_of(T.begin(), T.end(), [&](const LatticeVector& w) {
        Exponents u = sub(v, w);
        return is_nonnegative(u) && ord.compare(v, u) == Ordering::Greater;
      });
      if (!improves) return false;
    }
  }
  return true;
}

}  // namespace toric
