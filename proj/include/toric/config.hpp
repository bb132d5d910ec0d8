#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toric/error.hpp"
#include "toric/exactmath.hpp"
#include "toric/orders.hpp"
#include "toric/vector.hpp"

namespace toric {

/// Integer configuration matrix A (columns a_1..a_n) together with a positive
/// grading certificate when one exists.
///
/// Rows that are rational combinations of earlier rows are dropped on
/// construction: the kernel lattice, the toric ideal, the Groebner fan and the
/// regular triangulations only depend on the row space, and everything
/// downstream needs full row rank. `original()` keeps the input as given;
/// right-hand sides of integer programs refer to it.
class ConfigMatrix {
 public:
  explicit ConfigMatrix(IntMatrix A) : original_(std::move(A)) {
    require(original_.rows() >= 1 && original_.cols() >= 1, ErrorKind::InvalidArgument,
            "configuration matrix must have at least one row and one column");
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < original_.rows(); ++i) {
      keep.push_back(i);
      if (rank(original_.select_rows(keep)) < keep.size()) keep.pop_back();
    }
    require(!keep.empty(), ErrorKind::RankDeficient, "configuration matrix is zero");
    matrix_ = original_.select_rows(keep);
    columns_ = matrix_.transpose().to_int_rows();
    find_grading();
  }

  const IntMatrix& original() const { return original_; }
  /// Full-row-rank matrix with the same row space as original().
  const IntMatrix& matrix() const { return matrix_; }
  std::size_t d() const { return matrix_.rows(); }
  std::size_t n() const { return matrix_.cols(); }
  std::span<const Int> column(std::size_t j) const { return columns_[j]; }

  /// Primitive positive integer vector in the row space, if any. When the
  /// all-ones vector lies in the row space it is used, so degrees are
  /// ordinary total degrees.
  const std::optional<IntVec>& grading() const { return grading_; }
  bool pointed() const { return grading_.has_value(); }

  void require_pointed() const {
    require(pointed(), ErrorKind::NotPointed, "no positive grading lies in the row space of A");
  }

  const IntVec& grading_or_throw() const {
    require_pointed();
    return *grading_;
  }

  /// Grading degree of x^u.
  Int degree_of_monomial(std::span<const Int> u) const {
    __int128 s = dot(grading_or_throw(), u);
    return checked::narrow(s);
  }

  /// Degree of the binomial x^(v+) - x^(v-) of a kernel vector.
  Int degree(std::span<const Int> v) const { return degree_of_monomial(positive_part(v)); }

  /// A v with the reduced matrix.
  IntVec image(std::span<const Int> v) const { return matrix_.apply(v); }

  bool in_kernel(std::span<const Int> v) const { return v.size() == n() && is_zero(image(v)); }

  /// Term order with the given weight. Weights with negative entries are only
  /// accepted on positively graded configurations.
  TermOrder order(const RationalVector& weight, Tiebreak tb = Tiebreak::DegRevLex) const {
    require(weight.size() == n(), ErrorKind::DimensionMismatch,
            "weight has " + std::to_string(weight.size()) + " entries, expected " + std::to_string(n()));
    TermOrder o = TermOrder::weighted(weight, tb);
    require(o.weight_nonnegative() || pointed(), ErrorKind::InvalidArgument,
            "negative weights require a positively graded configuration");
    return o;
  }

  TermOrder order(const IntVec& weight, Tiebreak tb = Tiebreak::DegRevLex) const {
    return order(to_rational(weight), tb);
  }

  /// Shifts omega along the grading (which changes nothing on kernel vectors)
  /// until every entry is at least 1.
  IntVec positive_representative(std::span<const Int> omega) const {
    const IntVec& g = grading_or_throw();
    Int t = 0;
    for (std::size_t i = 0; i < n(); ++i) {
      if (omega[i] >= 1) continue;
      Int need = (1 - omega[i] + g[i] - 1) / g[i];
      t = std::max(t, need);
    }
    IntVec out(n());
    for (std::size_t i = 0; i < n(); ++i) out[i] = checked::add(omega[i], checked::mul(t, g[i]));
    return out;
  }

 private:
  void find_grading() {
    IntVec ones(n(), 1);
    std::vector<IntVec> rows = matrix_.to_int_rows();
    rows.push_back(ones);
    if (rank(IntMatrix::from_rows(rows)) == d()) {
      grading_ = ones;
      return;
    }
    LinearSystem sys{d(), {}, {}, {}, {}};
    for (std::size_t j = 0; j < n(); ++j) {
      RationalVector row(d());
      for (std::size_t i = 0; i < d(); ++i) row[i] = Rational(matrix_(i, j));
      sys.add_ge(std::move(row), 1);
    }
    auto c = find_feasible_point(sys);
    if (!c) return;
    RationalVector g(n(), Rational(0));
    for (std::size_t j = 0; j < n(); ++j)
      for (std::size_t i = 0; i < d(); ++i) g[j] += (*c)[i] * Rational(matrix_(i, j));
    grading_ = clear_denominators(g);
  }

  IntMatrix original_;
  IntMatrix matrix_;
  std::vector<IntVec> columns_;
  std::optional<IntVec> grading_;
};

}  // namespace toric
