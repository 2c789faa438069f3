#pragma once

// Exact linear algebra kernels over an arbitrary field scalar (Rat or Fp).
// Plain Gaussian elimination with first-nonzero pivoting; all results exact.

#include <optional>
#include <vector>

#include "lie/numeric.h"

namespace lie {

template <class S>
bool is_zero(const S& s) { return s.is_zero(); }
inline bool is_zero(const Rat& s) { return s.is_zero(); }
inline bool is_zero(const Fp& s) { return s.is_zero(); }

// Reduces m in place to row echelon form; returns pivot column indices.
template <class S>
std::vector<Eigen::Index> row_echelon(Mat<S>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (!is_zero(m(r, col))) { sel = r; break; }
    }
    if (sel < 0) continue;
    if (sel != row) m.row(sel).swap(m.row(row));
    S inv_piv = S(1) / m(row, col);
    for (Eigen::Index r = row + 1; r < m.rows(); ++r) {
      if (is_zero(m(r, col))) continue;
      S f = m(r, col) * inv_piv;
      for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class S>
Eigen::Index rank_of(Mat<S> m) {
  return static_cast<Eigen::Index>(row_echelon(m).size());
}

// Rows of the result span ker(m x = 0) viewed as row vectors x with m * x^T = 0,
// i.e. the null space of the linear map v -> m v.
template <class S>
Mat<S> kernel_basis(Mat<S> m) {
  Eigen::Index n = m.cols();
  std::vector<Eigen::Index> pivots = row_echelon(m);
  // back-substitute to reduced echelon
  for (Eigen::Index k = static_cast<Eigen::Index>(pivots.size()) - 1; k >= 0; --k) {
    Eigen::Index pc = pivots[k];
    S inv_piv = S(1) / m(k, pc);
    for (Eigen::Index c = pc; c < n; ++c) m(k, c) *= inv_piv;
    for (Eigen::Index r = 0; r < k; ++r) {
      if (is_zero(m(r, pc))) continue;
      S f = m(r, pc);
      for (Eigen::Index c = pc; c < n; ++c) m(r, c) -= f * m(k, c);
    }
  }
  std::vector<bool> is_pivot(n, false);
  for (Eigen::Index pc : pivots) is_pivot[pc] = true;
  Eigen::Index nk = n - static_cast<Eigen::Index>(pivots.size());
  Mat<S> ker(nk, n);
  ker.setConstant(S(0));
  Eigen::Index kr = 0;
  for (Eigen::Index free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    ker(kr, free_col) = S(1);
    for (size_t k = 0; k < pivots.size(); ++k) {
      if (pivots[k] < free_col) ker(kr, pivots[k]) = -m(static_cast<Eigen::Index>(k), free_col);
    }
    ++kr;
  }
  return ker;
}

// Solves span(rows of basis) ∋ v; returns coefficients if representable.
template <class S>
std::optional<Vec<S>> in_row_span(const Mat<S>& basis, const Vec<S>& v) {
  Eigen::Index nb = basis.rows(), n = basis.cols();
  Mat<S> m(nb + 1, n);
  m.topRows(nb) = basis;
  m.row(nb) = v.transpose();
  Mat<S> probe = m.topRows(nb);
  if (rank_of(m) != rank_of(probe)) return std::nullopt;
  // solve basis^T x = v by elimination on the augmented transpose
  Mat<S> aug(n, nb + 1);
  aug.leftCols(nb) = basis.transpose();
  aug.col(nb) = v;
  std::vector<Eigen::Index> pivots = row_echelon(aug);
  Vec<S> x(nb);
  x.setConstant(S(0));
  for (Eigen::Index k = static_cast<Eigen::Index>(pivots.size()) - 1; k >= 0; --k) {
    Eigen::Index pc = pivots[k];
    if (pc == nb) return std::nullopt;  // inconsistent
    S acc = aug(k, nb);
    for (Eigen::Index c = pc + 1; c < nb; ++c) acc -= aug(k, c) * x(c);
    x(pc) = acc / aug(k, pc);
  }
  return x;
}

// Basis (rows) of the intersection of two row spans.
template <class S>
Mat<S> intersect_row_spans(const Mat<S>& a, const Mat<S>& b) {
  Eigen::Index na = a.rows(), nb = b.rows(), n = a.cols();
  Mat<S> stacked(na + nb, n);
  stacked.topRows(na) = a;
  stacked.bottomRows(nb) = b;
  Mat<S> ker = kernel_basis(Mat<S>(stacked.transpose()));
  // each kernel row (x | y) gives x^T a = -y^T b in the intersection
  Mat<S> out(ker.rows(), n);
  for (Eigen::Index r = 0; r < ker.rows(); ++r)
    out.row(r) = ker.row(r).head(na) * a;
  Mat<S> echelon = out;
  std::vector<Eigen::Index> piv = row_echelon(echelon);
  return echelon.topRows(static_cast<Eigen::Index>(piv.size()));
}

// Removes linearly dependent rows, keeping the first spanning subset.
template <class S>
Mat<S> independent_rows(const Mat<S>& m) {
  Mat<S> acc(m.rows(), m.cols());
  Eigen::Index kept = 0;
  Mat<S> ech(0, m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Mat<S> trial(kept + 1, m.cols());
    if (kept > 0) trial.topRows(kept) = acc.topRows(kept);
    trial.row(kept) = m.row(r);
    if (rank_of(trial) == kept + 1) {
      acc.row(kept) = m.row(r);
      ++kept;
    }
  }
  return acc.topRows(kept);
}

}  // namespace lie
