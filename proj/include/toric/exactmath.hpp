#pragma once

// Arbitrary-precision integer linear algebra: Hermite normal form, kernel
// lattices, fraction-free determinants, maximal minors, and exact feasibility
// of homogeneous strict/weak inequality systems.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "toric/error.hpp"
#include "toric/simplex.hpp"
#include "toric/vector.hpp"

namespace toric {

inline Int to_int64(const Integer& z) {
  if (!z.fits_slong_p()) fail(ErrorKind::Overflow, "integer " + z.get_str() + " does not fit in int64");
  return static_cast<Int>(z.get_si());
}

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      require(r.size() == cols_, ErrorKind::DimensionMismatch, "ragged matrix literal");
      for (long x : r) data_.emplace_back(x);
    }
  }

  static IntMatrix from_rows(const std::vector<IntVec>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require(rows[i].size() == m.cols_, ErrorKind::DimensionMismatch, "ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = static_cast<long>(rows[i][j]);
    }
    return m;
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Integer> row(std::size_t i) const {
    return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
  }
  std::vector<Integer> column(std::size_t j) const {
    std::vector<Integer> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntMatrix select_columns(std::span<const std::size_t> idx) const {
    IntMatrix s(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < idx.size(); ++k) s(i, k) = (*this)(i, idx[k]);
    return s;
  }

  IntMatrix select_rows(std::span<const std::size_t> idx) const {
    IntMatrix s(idx.size(), cols_);
    for (std::size_t k = 0; k < idx.size(); ++k)
      for (std::size_t j = 0; j < cols_; ++j) s(k, j) = (*this)(idx[k], j);
    return s;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  /// row[dst] -= f * row[src]
  void sub_row_multiple(std::size_t dst, std::size_t src, const Integer& f) {
    if (f == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) -= f * (*this)(src, j);
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

  bool row_is_zero(std::size_t r) const {
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(r, j) != 0) return false;
    return true;
  }

  bool has_negative_entry() const {
    return std::any_of(data_.begin(), data_.end(), [](const Integer& z) { return z < 0; });
  }

  /// Matrix-vector product A*v with int64 result (overflow-checked).
  IntVec apply(std::span<const Int> v) const {
    require(v.size() == cols_, ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
    IntVec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < cols_; ++j)
        if (v[j] != 0) s += (*this)(i, j) * static_cast<long>(v[j]);
      r[i] = to_int64(s);
    }
    return r;
  }

  std::vector<IntVec> to_int_rows() const {
    std::vector<IntVec> out(rows_, IntVec(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i][j] = to_int64((*this)(i, j));
    return out;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    require(a.cols_ == b.rows_, ErrorKind::DimensionMismatch, "matrix product size mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct HermiteForm {
  IntMatrix H;  // row-style Hermite normal form
  IntMatrix U;  // unimodular, U * M = H
  std::size_t rank = 0;
};

/// Row-style Hermite normal form. Convention: pivots (first nonzero entry of
/// each nonzero row) are positive and move strictly right going down; entries
/// above a pivot lie in [0, pivot); zero rows come last.
inline HermiteForm hnf(const IntMatrix& M) {
  HermiteForm out{M, IntMatrix::identity(M.rows()), 0};
  IntMatrix& H = out.H;
  IntMatrix& U = out.U;
  std::size_t r = 0;
  for (std::size_t c = 0; c < H.cols() && r < H.rows(); ++c) {
    for (;;) {
      std::size_t best = H.rows();
      for (std::size_t i = r; i < H.rows(); ++i)
        if (H(i, c) != 0 && (best == H.rows() || abs(H(i, c)) < abs(H(best, c)))) best = i;
      if (best == H.rows()) break;
      H.swap_rows(r, best);
      U.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < H.rows(); ++i) {
        if (H(i, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), H(i, c).get_mpz_t(), H(r, c).get_mpz_t());
        H.sub_row_multiple(i, r, q);
        U.sub_row_multiple(i, r, q);
        if (H(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      H.negate_row(r);
      U.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), H(i, c).get_mpz_t(), H(r, c).get_mpz_t());
      H.sub_row_multiple(i, r, q);
      U.sub_row_multiple(i, r, q);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

/// True iff H satisfies the documented row-style normal form.
inline bool is_hermite_normal_form(const IntMatrix& H) {
  std::size_t last_pivot_col = 0;
  bool seen_zero_row = false;
  for (std::size_t i = 0; i < H.rows(); ++i) {
    std::size_t p = 0;
    while (p < H.cols() && H(i, p) == 0) ++p;
    if (p == H.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    if (H(i, p) <= 0) return false;
    if (i > 0 && p <= last_pivot_col) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (H(k, p) < 0 || H(k, p) >= H(i, p)) return false;
    last_pivot_col = p;
  }
  return true;
}

/// Fraction-free (Bareiss) determinant.
inline Integer det_bareiss(IntMatrix M) {
  require(M.rows() == M.cols(), ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = M.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && M(p, k) == 0) ++p;
      if (p == n) return 0;
      M.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        M(i, j) = t;
      }
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

inline std::size_t rank(const IntMatrix& M) { return hnf(M).rank; }

/// Calls f(indices) for every k-subset of {0..n-1} in lexicographic order;
/// stops early when f returns false.
inline void for_each_combination(std::size_t n, std::size_t k,
                                 const std::function<bool(const std::vector<std::size_t>&)>& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (!f(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline void require_full_row_rank(const IntMatrix& A) {
  require(A.rows() >= 1 && A.cols() >= 1, ErrorKind::InvalidArgument, "empty matrix");
  require(rank(A) == A.rows(), ErrorKind::RankDeficient,
          "matrix has rank below its row count " + std::to_string(A.rows()));
}

/// Basis of { v in Z^n : A v = 0 }, returned in Hermite normal form so equal
/// lattices give identical output.
inline std::vector<LatticeVector> kernel_lattice_basis(const IntMatrix& A) {
  require(A.rows() >= 1 && A.cols() >= 1, ErrorKind::InvalidArgument, "empty matrix");
  HermiteForm h = hnf(A.transpose());
  require(h.rank == A.rows(), ErrorKind::RankDeficient,
          "rank " + std::to_string(h.rank) + " below row count " + std::to_string(A.rows()));
  const std::size_t n = A.cols();
  if (h.rank == n) return {};
  std::vector<std::size_t> rows;
  for (std::size_t i = h.rank; i < n; ++i) rows.push_back(i);
  HermiteForm k = hnf(h.U.select_rows(rows));
  std::vector<LatticeVector> basis;
  for (std::size_t i = 0; i < k.rank; ++i) {
    LatticeVector v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = to_int64(k.H(i, j));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// D(A): largest absolute value of a maximal minor.
inline Integer max_abs_minor(const IntMatrix& A) {
  require_full_row_rank(A);
  Integer best = 0;
  for_each_combination(A.cols(), A.rows(), [&](const std::vector<std::size_t>& idx) {
    Integer d = abs(det_bareiss(A.select_columns(idx)));
    if (d > best) best = d;
    return true;
  });
  return best;
}

/// gcd of all maximal minors: the index of the lattice spanned by the columns
/// inside its saturation.
inline Integer gcd_of_maximal_minors(const IntMatrix& A) {
  require_full_row_rank(A);
  Integer g = 0;
  for_each_combination(A.cols(), A.rows(), [&](const std::vector<std::size_t>& idx) {
    Integer d = det_bareiss(A.select_columns(idx));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    return g != 1;
  });
  return g;
}

inline RationalVector to_rational(std::span<const Int> v) {
  RationalVector r;
  r.reserve(v.size());
  for (Int x : v) r.emplace_back(static_cast<long>(x));
  return r;
}

/// Scales a rational vector by a positive factor to a primitive integer vector.
inline IntVec clear_denominators(const RationalVector& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> z(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    z[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
  }
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_int64(g > 1 ? Integer(z[i] / g) : z[i]);
  return out;
}

/// Solves the square system M x = rhs over Q; nullopt when M is singular.
inline std::optional<RationalVector> solve_square(std::vector<RationalVector> M, RationalVector rhs) {
  const std::size_t n = M.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && M[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(M[p], M[c]);
    std::swap(rhs[p], rhs[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || M[i][c] == 0) continue;
      Rational f = M[i][c] / M[c][c];
      for (std::size_t j = c; j < n; ++j) M[i][j] -= f * M[c][j];
      rhs[i] -= f * rhs[c];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / M[i][i];
  return x;
}

namespace detail {

inline std::size_t common_dimension(std::span<const LatticeVector> vs, std::size_t dim) {
  for (const auto& v : vs)
    require(v.size() == dim, ErrorKind::DimensionMismatch,
            "inequality of length " + std::to_string(v.size()) + " in dimension " + std::to_string(dim));
  return dim;
}

}  // namespace detail

/// Some omega with g.omega > 0 for every g, or nullopt if none exists. The
/// witness is a primitive integer vector (as rationals).
inline std::optional<RationalVector> strict_feasible(std::span<const LatticeVector> ineqs, std::size_t dim) {
  detail::common_dimension(ineqs, dim);
  LinearSystem sys{dim, {}, {}, {}, {}};
  for (const auto& g : ineqs) sys.add_ge(to_rational(g), 1);
  auto x = find_feasible_point(sys);
  if (!x) return std::nullopt;
  return to_rational(clear_denominators(*x));
}

inline std::optional<RationalVector> strict_feasible(std::span<const LatticeVector> ineqs) {
  require(!ineqs.empty(), ErrorKind::InvalidArgument, "empty system has no dimension; pass it explicitly");
  return strict_feasible(ineqs, ineqs.front().size());
}

/// Mixed homogeneous system: strict rows g.omega > 0 and weak rows h.omega >= 0.
inline std::optional<RationalVector> mixed_feasible(std::span<const LatticeVector> strict,
                                                    std::span<const LatticeVector> weak, std::size_t dim) {
  detail::common_dimension(strict, dim);
  detail::common_dimension(weak, dim);
  LinearSystem sys{dim, {}, {}, {}, {}};
  for (const auto& g : strict) sys.add_ge(to_rational(g), 1);
  for (const auto& h : weak) sys.add_ge(to_rational(h), 0);
  auto x = find_feasible_point(sys);
  if (!x) return std::nullopt;
  return to_rational(clear_denominators(*x));
}

/// Whether ineqs[index] defines a facet of { omega : g.omega >= 0 for all g }:
/// true iff some omega violates it strictly while satisfying all the others.
/// No deduplication happens here: a repeated inequality is implied by its
/// copy and is therefore reported redundant. Callers that count facets merge
/// duplicates first.
inline bool is_irredundant(std::span<const LatticeVector> ineqs, std::size_t index) {
  require(index < ineqs.size(), ErrorKind::InvalidArgument, "inequality index out of range");
  const std::size_t dim = ineqs[index].size();
  detail::common_dimension(ineqs, dim);
  std::vector<LatticeVector> strict{negate(ineqs[index])};
  std::vector<LatticeVector> weak;
  for (std::size_t i = 0; i < ineqs.size(); ++i)
    if (i != index) weak.push_back(ineqs[i]);
  return mixed_feasible(strict, weak, dim).has_value();
}

}  // namespace toric
