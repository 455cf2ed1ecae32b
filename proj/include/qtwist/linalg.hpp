#pragma once

#include <optional>
#include <vector>

#include "qtwist/eigen_support.hpp"

// Exact elimination over an arbitrary field scalar.  Pivoting is always
// "first nonzero entry", never by magnitude, so every basis and every
// reduced form is deterministic.
namespace qtwist {

template <class F>
struct Echelon {
  Mat<F> reduced;           // reduced row-echelon form
  std::vector<int> pivots;  // pivot column per nonzero row
  int rank = 0;
};

template <class F>
Echelon<F> rref(Mat<F> a) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  Echelon<F> e;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!(a(i, c) == F(0))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    F inv = F(1) / a(r, c);
    for (int j = c; j < cols; ++j) a(r, j) = a(r, j) * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      F f = a(i, c);
      if (f == F(0)) continue;
      for (int j = c; j < cols; ++j) a(i, j) = a(i, j) - f * a(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rank = r;
  e.reduced = std::move(a);
  return e;
}

template <class F>
int rank_of(const Mat<F>& a) {
  return rref(a).rank;
}

// Canonical kernel basis from the reduced form: one column per free
// variable, with a 1 at the free position.  Columns are ordered by the
// free column index.
template <class F>
Mat<F> kernel_basis(const Mat<F>& a) {
  Echelon<F> e = rref(a);
  const int cols = static_cast<int>(a.cols());
  std::vector<bool> is_pivot(cols, false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat<F> k = Mat<F>::Zero(cols, static_cast<int>(free_cols.size()));
  for (int j = 0; j < static_cast<int>(free_cols.size()); ++j) {
    int fc = free_cols[j];
    k(fc, j) = F(1);
    for (int i = 0; i < e.rank; ++i) k(e.pivots[i], j) = -e.reduced(i, fc);
  }
  return k;
}

// Unique-or-any exact solution of a x = b; nullopt when inconsistent.
template <class F>
std::optional<Vec<F>> solve(const Mat<F>& a, const Vec<F>& b) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  Mat<F> aug(rows, cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;
  Echelon<F> e = rref(aug);
  for (int i = 0; i < e.rank; ++i)
    if (e.pivots[i] == cols) return std::nullopt;
  Vec<F> x = Vec<F>::Zero(cols);
  for (int i = 0; i < e.rank; ++i) x(e.pivots[i]) = e.reduced(i, cols);
  return x;
}

// Columnwise solve; nullopt if any column is inconsistent.
template <class F>
std::optional<Mat<F>> solve_all(const Mat<F>& a, const Mat<F>& b) {
  Mat<F> x(a.cols(), b.cols());
  for (int j = 0; j < b.cols(); ++j) {
    auto xj = solve<F>(a, Vec<F>(b.col(j)));
    if (!xj) return std::nullopt;
    x.col(j) = *xj;
  }
  return x;
}

template <class F>
Mat<F> inverse(const Mat<F>& a) {
  const int n = static_cast<int>(a.rows());
  if (a.cols() != n) throw std::logic_error("inverse of a non-square matrix");
  Mat<F> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = Mat<F>::Identity(n, n);
  Echelon<F> e = rref(aug);
  if (e.rank < n) throw std::logic_error("matrix is singular");
  return e.reduced.rightCols(n);
}

template <class F>
F determinant(Mat<F> a) {
  const int n = static_cast<int>(a.rows());
  if (a.cols() != n) throw std::logic_error("determinant of a non-square matrix");
  F det = F(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!(a(i, c) == F(0))) {
        p = i;
        break;
      }
    if (p < 0) return F(0);
    if (p != c) {
      a.row(p).swap(a.row(c));
      det = -det;
    }
    det = det * a(c, c);
    F inv = F(1) / a(c, c);
    for (int i = c + 1; i < n; ++i) {
      F f = a(i, c) * inv;
      if (f == F(0)) continue;
      for (int j = c; j < n; ++j) a(i, j) = a(i, j) - f * a(c, j);
    }
  }
  return det;
}

// Incremental independence filter: feeds candidate rows in order and keeps
// the indices that strictly grow the span (optionally on top of a seed
// span).  Greedy and deterministic.
template <class F>
class SpanBuilder {
 public:
  explicit SpanBuilder(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Reduces v against the current span; returns the residue.
  Vec<F> residue(Vec<F> v) const {
    for (const auto& [lead, row] : rows_) {
      F f = v(lead);
      if (f == F(0)) continue;
      for (int j = 0; j < dim_; ++j) v(j) = v(j) - f * row(j);
    }
    return v;
  }

  bool contains(const Vec<F>& v) const {
    Vec<F> r = residue(v);
    for (int j = 0; j < dim_; ++j)
      if (!(r(j) == F(0))) return false;
    return true;
  }

  // Returns true when v enlarged the span.
  bool add(const Vec<F>& v) {
    Vec<F> r = residue(v);
    int lead = -1;
    for (int j = 0; j < dim_; ++j)
      if (!(r(j) == F(0))) {
        lead = j;
        break;
      }
    if (lead < 0) return false;
    F inv = F(1) / r(lead);
    for (int j = 0; j < dim_; ++j) r(j) = r(j) * inv;
    rows_.emplace_back(lead, std::move(r));
    return true;
  }

 private:
  int dim_;
  std::vector<std::pair<int, Vec<F>>> rows_;  // (leading column, unit-lead row)
};

template <class F>
bool mats_equal(const Mat<F>& a, const Mat<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

// Leading principal minors det(a[0..k-1, 0..k-1]) for k = 1..n, exact.
template <class F>
std::vector<F> principal_minors(const Mat<F>& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<F> minors;
  for (int k = 1; k <= n; ++k) minors.push_back(determinant<F>(a.topLeftCorner(k, k)));
  return minors;
}

}  // namespace qtwist
