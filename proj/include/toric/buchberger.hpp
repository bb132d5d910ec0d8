#pragma once

// Geometric Buchberger algorithm on binomials x^head - x^tail.
//
// Monomials are exponent vectors, so reducing a monomial by a binomial is a
// lattice translation; a whole chain of reductions by the same binomial is
// applied in one step (largest admissible multiple). S-pairs of binomials are
// again binomials, so the algorithm never leaves the binomial world.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "toric/error.hpp"
#include "toric/orders.hpp"
#include "toric/vector.hpp"

namespace toric {

/// Resource limits; 0 means unlimited. Exceeding one raises LimitExceeded.
struct Limits {
  std::size_t max_elements = 0;
  /// Largest total degree allowed for a leading term.
  Int max_degree = 0;
};

struct BuchbergerOptions {
  /// Buchberger's chain criterion on top of the coprime-leading-term rule.
  bool chain_criterion = false;
  /// Variables known to be nonzerodivisors modulo the ideal (I : x_j = I).
  /// Common powers of these variables are cancelled from new binomials.
  /// Leave empty for an arbitrary binomial ideal.
  std::vector<bool> saturated;
  Limits limits;
};

class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(TermOrder order, std::vector<Binomial> elements, bool reduced)
      : order_(std::move(order)), elements_(std::move(elements)), reduced_(reduced) {
    std::sort(elements_.begin(), elements_.end());
  }

  const TermOrder& order() const { return order_; }
  const std::vector<Binomial>& elements() const { return elements_; }
  bool reduced() const { return reduced_; }
  std::size_t size() const { return elements_.size(); }

  /// Oriented vectors head - tail, in element order.
  std::vector<LatticeVector> vectors() const {
    std::vector<LatticeVector> out;
    out.reserve(elements_.size());
    for (const auto& b : elements_) out.push_back(b.vector());
    return out;
  }

  /// Leading exponents; for a reduced basis these minimally generate the initial ideal.
  std::vector<Exponents> leading_terms() const {
    std::vector<Exponents> out;
    for (const auto& b : elements_) out.push_back(b.head);
    std::sort(out.begin(), out.end());
    return out;
  }

  Int max_degree() const {
    Int d = 0;
    for (const auto& b : elements_) d = std::max(d, b.degree());
    return d;
  }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.elements_ == b.elements_ && a.reduced_ == b.reduced_;
  }

 private:
  TermOrder order_;
  std::vector<Binomial> elements_;
  bool reduced_ = false;
};

namespace detail {

/// Applies x^m -> x^(m - k(head - tail)) with the largest k keeping every
/// intermediate monomial divisible by x^head. Requires head | m.
inline void reduce_in_place(Exponents& m, const Binomial& b) {
  Int k = -1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    Int d = checked::sub(b.head[i], b.tail[i]);
    if (d <= 0) continue;
    Int steps = (m[i] - b.head[i]) / d;
    if (k < 0 || steps < k) k = steps;
  }
  if (k < 0) fail(ErrorKind::Internal, "binomial tail is a multiple of its head; order is not a term order");
  k = checked::add(k, 1);
  for (std::size_t i = 0; i < m.size(); ++i) {
    Int d = b.head[i] - b.tail[i];
    if (d != 0) m[i] = checked::sub(m[i], checked::mul(k, d));
  }
}

/// Working set of binomials with cached head supports for fast divisor lookup.
class ReducerSet {
 public:
  void add(Binomial b) {
    masks_.push_back(support_mask(b.head));
    elems_.push_back(std::move(b));
  }
  std::size_t size() const { return elems_.size(); }
  const Binomial& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<Binomial>& elements() const { return elems_; }

  /// First element (index order) whose head divides m, skipping `skip`.
  std::optional<std::size_t> find_divisor(std::span<const Int> m, std::size_t skip = SIZE_MAX) const {
    const std::uint64_t mm = support_mask(m);
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (i == skip || (masks_[i] & ~mm) != 0) continue;
      if (divides(elems_[i].head, m)) return i;
    }
    return std::nullopt;
  }

  Exponents normal_form(Exponents m, std::size_t skip = SIZE_MAX) const {
    while (auto i = find_divisor(m, skip)) reduce_in_place(m, elems_[*i]);
    return m;
  }

 private:
  std::vector<Binomial> elems_;
  std::vector<std::uint64_t> masks_;
};

inline void cancel_saturated(Exponents& a, Exponents& b, const std::vector<bool>& saturated) {
  for (std::size_t j = 0; j < saturated.size(); ++j) {
    if (!saturated[j]) continue;
    Int c = std::min(a[j], b[j]);
    a[j] -= c;
    b[j] -= c;
  }
}

/// Fully reduces x^a - x^b against `set`, cancelling saturated common factors
/// until stable. Returns nullopt when the binomial reduces to zero.
inline std::optional<Binomial> reduce_binomial(Exponents a, Exponents b, const ReducerSet& set,
                                               const TermOrder& ord, const std::vector<bool>& saturated) {
  for (;;) {
    a = set.normal_form(std::move(a));
    b = set.normal_form(std::move(b));
    if (a == b) return std::nullopt;
    if (saturated.empty()) break;
    Exponents a2 = a, b2 = b;
    cancel_saturated(a2, b2, saturated);
    if (a2 == a) break;
    a = std::move(a2);
    b = std::move(b2);
  }
  return make_binomial(std::move(a), std::move(b), ord);
}

/// Drops non-minimal leading terms and reduces tails. `elems` must be a
/// Groebner basis.
inline std::vector<Binomial> reduce_groebner_basis(std::vector<Binomial> elems) {
  std::sort(elems.begin(), elems.end());
  std::vector<Binomial> minimal;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < elems.size() && !redundant; ++j) {
      if (i == j || !divides(elems[j].head, elems[i].head)) continue;
      // Equal heads: keep the first copy only.
      redundant = elems[j].head != elems[i].head || j < i;
    }
    if (!redundant) minimal.push_back(elems[i]);
  }
  ReducerSet set;
  for (const auto& b : minimal) set.add(b);
  for (auto& b : minimal) b.tail = set.normal_form(std::move(b.tail));
  return minimal;
}

}  // namespace detail

/// Normal form of x^u modulo G (unique when G is a Groebner basis).
inline Exponents normal_form(const Exponents& u, const GroebnerBasis& G) {
  require(u.size() == G.order().size(), ErrorKind::DimensionMismatch, "exponent length differs from basis");
  require(is_nonnegative(u), ErrorKind::InvalidArgument, "exponent vector has a negative entry");
  detail::ReducerSet set;
  for (const auto& b : G.elements()) set.add(b);
  return set.normal_form(u);
}

/// Lattice vector of the S-binomial of f and g: S(f,g) = x^(m-hf) f - x^(m-hg) g
/// with m = lcm(hf, hg) equals x^(m-hg+tg) - x^(m-hf+tf), whose vector is
/// vec(f) - vec(g).
inline LatticeVector s_vector(const Binomial& f, const Binomial& g) { return sub(f.vector(), g.vector()); }

namespace detail {

struct Pair {
  std::size_t i, j;
  Exponents lcm;
};

class PairQueue {
 public:
  explicit PairQueue(const TermOrder* ord) : heap_(Cmp{ord}) {}
  void push(Pair p) { heap_.push(std::move(p)); }
  bool empty() const { return heap_.empty(); }
  Pair pop() {
    Pair p = heap_.top();
    heap_.pop();
    return p;
  }

 private:
  struct Cmp {
    const TermOrder* ord;
    // Min-heap on the lcm under the term order (normal selection strategy).
    bool operator()(const Pair& a, const Pair& b) const {
      switch (ord->compare_unchecked(a.lcm, b.lcm)) {
        case Ordering::Greater: return true;
        case Ordering::Less: return false;
        case Ordering::Equal: break;
      }
      return std::tie(a.j, a.i) > std::tie(b.j, b.i);
    }
  };
  std::priority_queue<Pair, std::vector<Pair>, Cmp> heap_;
};

}  // namespace detail

/// Reduced Groebner basis of the ideal generated by the given binomials.
inline GroebnerBasis buchberger(const std::vector<Binomial>& gens, const TermOrder& ord,
                                const BuchbergerOptions& opts = {}) {
  ord.validate();
  const std::size_t n = ord.size();
  for (const auto& g : gens)
    require(g.head.size() == n && g.tail.size() == n, ErrorKind::DimensionMismatch,
            "generator length differs from order length");
  require(opts.saturated.empty() || opts.saturated.size() == n, ErrorKind::DimensionMismatch,
          "saturated-variable mask length differs from order length");

  detail::ReducerSet basis;
  detail::PairQueue queue(&ord);
  std::vector<std::vector<char>> done;

  auto insert = [&](Binomial b) {
    const std::size_t k = basis.size();
    if (opts.limits.max_elements && k >= opts.limits.max_elements)
      fail(ErrorKind::LimitExceeded,
           "Groebner basis exceeded " + std::to_string(opts.limits.max_elements) + " elements");
    if (opts.limits.max_degree && total_degree(b.head) > opts.limits.max_degree)
      fail(ErrorKind::LimitExceeded,
           "Groebner basis element exceeded degree " + std::to_string(opts.limits.max_degree));
    for (std::size_t i = 0; i < k; ++i) queue.push({i, k, monomial_lcm(basis[i].head, b.head)});
    basis.add(std::move(b));
    if (opts.chain_criterion) {
      for (auto& row : done) row.push_back(0);
      done.emplace_back(k + 1, 0);
    }
  };
  auto mark_done = [&](std::size_t i, std::size_t j) {
    if (opts.chain_criterion) done[i][j] = done[j][i] = 1;
  };

  for (const auto& g : gens) {
    require(g.head.size() == n, ErrorKind::DimensionMismatch, "generator length mismatch");
    if (g.head == g.tail) continue;
    if (auto r = detail::reduce_binomial(g.head, g.tail, basis, ord, opts.saturated)) insert(std::move(*r));
  }

  while (!queue.empty()) {
    detail::Pair p = queue.pop();
    const Binomial& f = basis[p.i];
    const Binomial& g = basis[p.j];
    if (disjoint_support(f.head, g.head)) {
      mark_done(p.i, p.j);
      continue;
    }
    if (opts.chain_criterion) {
      bool skip = false;
      for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
        if (k == p.i || k == p.j) continue;
        skip = done[p.i][k] && done[p.j][k] && divides(basis[k].head, p.lcm);
      }
      if (skip) {
        mark_done(p.i, p.j);
        continue;
      }
    }
    Exponents a = add(sub(p.lcm, f.head), f.tail);
    Exponents b = add(sub(p.lcm, g.head), g.tail);
    mark_done(p.i, p.j);
    if (auto r = detail::reduce_binomial(std::move(a), std::move(b), basis, ord, opts.saturated))
      insert(std::move(*r));
  }

  return GroebnerBasis(ord, detail::reduce_groebner_basis(basis.elements()), true);
}

/// Reduced Groebner basis of the ideal generated by x^(v+) - x^(v-), v in gens.
inline GroebnerBasis buchberger(const std::vector<LatticeVector>& gens, const TermOrder& ord,
                                const BuchbergerOptions& opts = {}) {
  std::vector<Binomial> bs;
  for (const auto& v : gens) {
    require(v.size() == ord.size(), ErrorKind::DimensionMismatch, "generator length differs from order length");
    if (!is_zero(v)) bs.push_back(orient(v, ord));
  }
  return buchberger(bs, ord, opts);
}

/// Inter-reduces a list of binomials: afterwards no term of any element is
/// divisible by the leading term of another. The generated ideal is unchanged.
inline std::vector<Binomial> autoreduce(std::vector<Binomial> elems, const TermOrder& ord) {
  for (auto& b : elems) {
    require(b.head.size() == ord.size() && b.tail.size() == ord.size(), ErrorKind::DimensionMismatch,
            "binomial length differs from order length");
    if (ord.compare(b.head, b.tail) == Ordering::Less) std::swap(b.head, b.tail);
  }
  std::erase_if(elems, [](const Binomial& b) { return b.head == b.tail; });
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(elems.begin(), elems.end());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      detail::ReducerSet others;
      for (std::size_t j = 0; j < elems.size(); ++j)
        if (j != i) others.add(elems[j]);
      Exponents a = others.normal_form(elems[i].head);
      Exponents b = others.normal_form(elems[i].tail);
      if (a == b) {
        elems.erase(elems.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      Binomial nb = make_binomial(std::move(a), std::move(b), ord);
      if (nb != elems[i]) {
        elems[i] = std::move(nb);
        changed = true;
        break;
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace toric
