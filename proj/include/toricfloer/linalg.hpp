#ifndef TORICFLOER_LINALG_HPP
#define TORICFLOER_LINALG_HPP

#include <optional>
#include <vector>

#include "toricfloer/rational.hpp"

namespace toricfloer {

struct Rref {
  MatrixXq mat;                  // reduced row echelon form
  std::vector<int> pivot_cols;   // one per pivot row, ascending
  int rank = 0;
};

/// Gauss-Jordan elimination over the rationals, exact.
Rref rref(MatrixXq m);

/// Basis of {x : Mx = 0}, one vector per free column of the rref.
std::vector<VectorXq> null_space(const MatrixXq& m);

/// Unique solution of Ax = b; nullopt when the system is inconsistent or
/// underdetermined.
std::optional<VectorXq> solve_unique(const MatrixXq& a, const VectorXq& b);

/// Exact determinant of a small integer matrix.
Rational determinant(const Eigen::MatrixXi& m);

}  // namespace toricfloer

#endif
