#pragma once

// Term orders: an integer weight vector refined by a deterministic tie-break,
// optionally preceded by an elimination block.

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toric/error.hpp"
#include "toric/exactmath.hpp"
#include "toric/vector.hpp"

namespace toric {

enum class Tiebreak { Lex, DegRevLex };

enum class Ordering { Less = -1, Equal = 0, Greater = 1 };

/// A total order on exponent vectors of length n.
///
/// Comparison of u and v proceeds in three stages:
///  1. if `elimination_block` = k > 0, the total degree in the first k
///     variables (larger wins);
///  2. the weight, weight.u against weight.v (larger wins);
///  3. the tie-break over `permutation`, where permutation[0] is the most
///     expensive variable:
///     - Lex: the first variable (in permutation order) where the exponents
///       differ decides, larger exponent wins;
///     - DegRevLex: total degree first (larger wins); then the last variable
///       in permutation order where the exponents differ decides, and the
///       smaller exponent wins.
///
/// Stage 3 is a term order on its own, so compare() is a total order that is
/// compatible with addition. It is a well-order whenever the weight is
/// nonnegative; toric callers may use other weights on positively graded
/// configurations, where only same-degree monomials are ever compared.
struct TermOrder {
  IntVec weight;
  Tiebreak tiebreak = Tiebreak::DegRevLex;
  std::vector<std::size_t> permutation;
  std::size_t elimination_block = 0;
  // Skip the total-degree step of the degrevlex tie-break. Only sound when
  // the weight is strictly positive.
  bool ungraded_tiebreak = false;

  std::size_t size() const { return weight.size(); }

  static TermOrder weighted(IntVec weight, Tiebreak tb = Tiebreak::DegRevLex) {
    TermOrder o;
    o.permutation.resize(weight.size());
    std::iota(o.permutation.begin(), o.permutation.end(), std::size_t{0});
    o.weight = std::move(weight);
    o.tiebreak = tb;
    return o;
  }

  /// Rational weights are cleared to integers by a positive common denominator.
  static TermOrder weighted(const RationalVector& weight, Tiebreak tb = Tiebreak::DegRevLex) {
    return weighted(clear_denominators(weight), tb);
  }

  static TermOrder degrevlex(std::size_t n) { return weighted(IntVec(n, 1), Tiebreak::DegRevLex); }
  static TermOrder lex(std::size_t n) { return weighted(IntVec(n, 0), Tiebreak::Lex); }

  /// Reverse lexicographic order refining a positive `grading`, with variable
  /// `last` the cheapest; the other variables keep their index order. Ties in
  /// grading go straight to revlex, so x_last divides the leading term of a
  /// homogeneous binomial only if it divides both terms.
  static TermOrder revlex_last(IntVec grading, std::size_t last) {
    require(std::all_of(grading.begin(), grading.end(), [](Int g) { return g > 0; }), ErrorKind::InvalidArgument,
            "grading must be strictly positive");
    TermOrder o = weighted(std::move(grading), Tiebreak::DegRevLex);
    o.ungraded_tiebreak = true;
    require(last < o.size(), ErrorKind::InvalidArgument, "variable index out of range");
    o.permutation.clear();
    for (std::size_t i = 0; i < o.size(); ++i)
      if (i != last) o.permutation.push_back(i);
    o.permutation.push_back(last);
    return o;
  }

  void validate() const {
    require(permutation.size() == weight.size(), ErrorKind::DimensionMismatch,
            "tie-break permutation length differs from weight length");
    std::vector<bool> seen(weight.size(), false);
    for (std::size_t p : permutation) {
      require(p < weight.size() && !seen[p], ErrorKind::InvalidArgument, "tie-break is not a permutation");
      seen[p] = true;
    }
    require(elimination_block <= weight.size(), ErrorKind::InvalidArgument, "elimination block too large");
  }

  bool weight_nonnegative() const { return is_nonnegative(weight); }

  Ordering compare(std::span<const Int> u, std::span<const Int> v) const {
    require(u.size() == size() && v.size() == size(), ErrorKind::DimensionMismatch,
            "exponent length differs from order length " + std::to_string(size()));
    return compare_unchecked(u, v);
  }

  /// compare() without the dimension check, for inner loops.
  Ordering compare_unchecked(std::span<const Int> u, std::span<const Int> v) const {
    if (elimination_block > 0) {
      __int128 du = 0, dv = 0;
      for (std::size_t i = 0; i < elimination_block; ++i) {
        du += u[i];
        dv += v[i];
      }
      if (du != dv) return du > dv ? Ordering::Greater : Ordering::Less;
    }
    __int128 wu = 0, wv = 0;
    for (std::size_t i = 0; i < weight.size(); ++i) {
      if (weight[i] == 0) continue;
      wu += static_cast<__int128>(weight[i]) * u[i];
      wv += static_cast<__int128>(weight[i]) * v[i];
    }
    if (wu != wv) return wu > wv ? Ordering::Greater : Ordering::Less;
    return compare_tiebreak(u, v);
  }

  bool greater(std::span<const Int> u, std::span<const Int> v) const {
    return compare_unchecked(u, v) == Ordering::Greater;
  }

 private:
  Ordering compare_tiebreak(std::span<const Int> u, std::span<const Int> v) const {
    const std::size_t n = permutation.size();
    if (tiebreak == Tiebreak::Lex) {
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t k = permutation[j];
        if (u[k] != v[k]) return u[k] > v[k] ? Ordering::Greater : Ordering::Less;
      }
      return Ordering::Equal;
    }
    if (!ungraded_tiebreak) {
      __int128 du = 0, dv = 0;
      for (std::size_t i = 0; i < n; ++i) {
        du += u[i];
        dv += v[i];
      }
      if (du != dv) return du > dv ? Ordering::Greater : Ordering::Less;
    }
    for (std::size_t j = n; j-- > 0;) {
      std::size_t k = permutation[j];
      if (u[k] != v[k]) return u[k] < v[k] ? Ordering::Greater : Ordering::Less;
    }
    return Ordering::Equal;
  }
};

/// A binomial x^head - x^tail with head > tail under the order it was built
/// for. Toric binomials have disjoint head/tail supports; binomials of
/// unsaturated lattice ideals may share a common monomial factor.
struct Binomial {
  Exponents head;
  Exponents tail;

  LatticeVector vector() const { return sub(head, tail); }
  Int degree() const { return std::max(total_degree(head), total_degree(tail)); }

  friend bool operator==(const Binomial&, const Binomial&) = default;
  friend auto operator<=>(const Binomial&, const Binomial&) = default;
};

inline Binomial make_binomial(Exponents a, Exponents b, const TermOrder& ord) {
  switch (ord.compare(a, b)) {
    case Ordering::Greater: return {std::move(a), std::move(b)};
    case Ordering::Less: return {std::move(b), std::move(a)};
    case Ordering::Equal: break;
  }
  fail(ErrorKind::ZeroVector, "binomial with equal terms");
}

/// Orients a nonzero lattice vector: leading part is whichever of v+, v- is
/// larger under `ord`.
inline Binomial orient(std::span<const Int> v, const TermOrder& ord) {
  require(v.size() == ord.size(), ErrorKind::DimensionMismatch, "vector length differs from order length");
  require(!is_zero(v), ErrorKind::ZeroVector, "cannot orient the zero vector");
  return make_binomial(positive_part(v), negative_part(v), ord);
}

inline std::string to_string(Tiebreak tb) { return tb == Tiebreak::Lex ? "lex" : "degrevlex"; }

inline Tiebreak parse_tiebreak(const std::string& s) {
  if (s == "lex") return Tiebreak::Lex;
  if (s == "degrevlex" || s == "revlex") return Tiebreak::DegRevLex;
  fail(ErrorKind::InvalidArgument, "unknown tie-break '" + s + "' (expected lex or degrevlex)");
}

}  // namespace toric
