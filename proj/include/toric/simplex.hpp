#pragma once

// Exact phase-one simplex over the rationals. This is the single feasibility
// engine behind strict-inequality systems, redundancy tests, gradings and
// triangulation face certificates.

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "toric/error.hpp"

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// { x in Q^dim : ge_rows[i].x >= ge_rhs[i], eq_rows[j].x = eq_rhs[j] }, x free.
struct LinearSystem {
  std::size_t dim = 0;
  std::vector<RationalVector> ge_rows;
  RationalVector ge_rhs;
  std::vector<RationalVector> eq_rows;
  RationalVector eq_rhs;

  void add_ge(RationalVector row, Rational rhs) {
    require(row.size() == dim, ErrorKind::DimensionMismatch, "constraint length differs from system dimension");
    ge_rows.push_back(std::move(row));
    ge_rhs.push_back(std::move(rhs));
  }
  void add_eq(RationalVector row, Rational rhs) {
    require(row.size() == dim, ErrorKind::DimensionMismatch, "constraint length differs from system dimension");
    eq_rows.push_back(std::move(row));
    eq_rhs.push_back(std::move(rhs));
  }
};

namespace detail {

class PhaseOneTableau {
 public:
  explicit PhaseOneTableau(const LinearSystem& sys) : dim_(sys.dim) {
    const std::size_t n_ge = sys.ge_rows.size();
    const std::size_t n_rows = n_ge + sys.eq_rows.size();
    // columns: x+ (dim) | x- (dim) | slack (n_ge) | artificial (n_rows) | rhs
    n_struct_ = 2 * dim_ + n_ge;
    n_cols_ = n_struct_ + n_rows;
    rows_.assign(n_rows, RationalVector(n_cols_ + 1));
    basis_.resize(n_rows);
    for (std::size_t i = 0; i < n_rows; ++i) {
      const bool ge = i < n_ge;
      const RationalVector& a = ge ? sys.ge_rows[i] : sys.eq_rows[i - n_ge];
      Rational b = ge ? sys.ge_rhs[i] : sys.eq_rhs[i - n_ge];
      Rational sign = b < 0 ? -1 : 1;
      auto& row = rows_[i];
      for (std::size_t j = 0; j < dim_; ++j) {
        row[j] = sign * a[j];
        row[dim_ + j] = -sign * a[j];
      }
      if (ge) row[2 * dim_ + i] = -sign;
      row[n_struct_ + i] = 1;
      row[n_cols_] = sign * b;
      basis_[i] = n_struct_ + i;
    }
    cost_.assign(n_cols_ + 1, 0);
    for (const auto& row : rows_)
      for (std::size_t j = 0; j < n_struct_; ++j) cost_[j] -= row[j];
    for (const auto& row : rows_) cost_[n_cols_] -= row[n_cols_];
  }

  bool solve() {
    for (;;) {
      // Bland's rule: lowest-index improving column, lowest-index leaving basic variable.
      std::size_t enter = n_cols_;
      for (std::size_t j = 0; j < n_cols_; ++j)
        if (cost_[j] < 0) {
          enter = j;
          break;
        }
      if (enter == n_cols_) break;
      std::size_t leave = rows_.size();
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rational ratio = rows_[i][n_cols_] / rows_[i][enter];
        if (leave == rows_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      // Phase one is bounded below by zero, so an entering column always has a pivot.
      if (leave == rows_.size()) fail(ErrorKind::Internal, "unbounded phase-one simplex");
      pivot(leave, enter);
    }
    return cost_[n_cols_] == 0;
  }

  RationalVector point() const {
    RationalVector x(dim_, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      std::size_t b = basis_[i];
      if (b < dim_) x[b] += rows_[i][n_cols_];
      else if (b < 2 * dim_) x[b - dim_] -= rows_[i][n_cols_];
    }
    return x;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    Rational p = rows_[r][c];
    for (auto& v : rows_[r]) v /= p;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      Rational f = rows_[i][c];
      for (std::size_t j = 0; j <= n_cols_; ++j)
        if (rows_[r][j] != 0) rows_[i][j] -= f * rows_[r][j];
    }
    if (cost_[c] != 0) {
      Rational f = cost_[c];
      for (std::size_t j = 0; j <= n_cols_; ++j)
        if (rows_[r][j] != 0) cost_[j] -= f * rows_[r][j];
    }
    basis_[r] = c;
  }

  std::size_t dim_;
  std::size_t n_struct_ = 0;
  std::size_t n_cols_ = 0;
  std::vector<RationalVector> rows_;
  RationalVector cost_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

/// Returns some point of the system, or nullopt when it is empty.
inline std::optional<RationalVector> find_feasible_point(const LinearSystem& sys) {
  if (sys.ge_rows.empty() && sys.eq_rows.empty()) return RationalVector(sys.dim, Rational(0));
  detail::PhaseOneTableau t(sys);
  if (!t.solve()) return std::nullopt;
  return t.point();
}

}  // namespace toric
