#include "toricfloer/linalg.hpp"

namespace toricfloer {

Rref rref(MatrixXq m) {
  Rref out;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < rows; ++r) {
      if (!m(r, col).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    Rational inv = Rational(1) / m(row, col);
    for (Eigen::Index c = col; c < cols; ++c) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Rational f = m(r, col);
      for (Eigen::Index c = col; c < cols; ++c)
        m(r, c) -= f * m(row, c);
    }
    out.pivot_cols.push_back(static_cast<int>(col));
    ++row;
  }
  out.rank = static_cast<int>(row);
  out.mat = std::move(m);
  return out;
}

std::vector<VectorXq> null_space(const MatrixXq& m) {
  Rref r = rref(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<VectorXq> basis;
  for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    VectorXq v = VectorXq::Constant(cols, Rational(0));
    v[free_col] = Rational(1);
    for (int prow = 0; prow < r.rank; ++prow)
      v[r.pivot_cols[prow]] = -r.mat(prow, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<VectorXq> solve_unique(const MatrixXq& a, const VectorXq& b) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  MatrixXq aug(rows, cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;
  Rref r = rref(std::move(aug));
  // inconsistent: pivot in the augmented column
  if (!r.pivot_cols.empty() && r.pivot_cols.back() == cols) return std::nullopt;
  if (r.rank < cols) return std::nullopt;  // underdetermined
  VectorXq x(cols);
  for (Eigen::Index i = 0; i < cols; ++i) x[i] = r.mat(i, cols);
  return x;
}

Rational determinant(const Eigen::MatrixXi& m) {
  const Eigen::Index n = m.rows();
  MatrixXq q(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) q(i, j) = Rational(m(i, j));
  Rational det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = col; r < n; ++r) {
      if (!q(r, col).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return Rational(0);
    if (piv != col) {
      q.row(piv).swap(q.row(col));
      det = -det;
    }
    det *= q(col, col);
    Rational inv = Rational(1) / q(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (q(r, col).is_zero()) continue;
      Rational f = q(r, col) * inv;
      for (Eigen::Index c = col; c < n; ++c) q(r, c) -= f * q(col, c);
    }
  }
  return det;
}

}  // namespace toricfloer
