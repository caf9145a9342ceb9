#pragma once

#include <Eigen/Dense>

namespace casimir::linalg {

struct EigenPair {
  double value = 0.0;
  Eigen::VectorXcd vector;
  double residual = 0.0;  // ||H x - value x||
  int iterations = 0;
};

/// Infinity norm of H, an upper bound on its spectral norm.
double norm_scale(const Eigen::MatrixXcd& H);

/// Lowest eigenpair of a Hermitian matrix by Lanczos with full
/// reorthogonalization. Stops when the true residual is <= tol * norm_scale(H).
/// Throws std::runtime_error with the residual if that is not reached.
EigenPair lanczos_lowest(const Eigen::MatrixXcd& H, double tol = 1e-12, int max_iter = 0);

/// Lowest eigenpair by dense diagonalization, for cross-checks.
EigenPair dense_lowest(const Eigen::MatrixXcd& H);

}  // namespace casimir::linalg
