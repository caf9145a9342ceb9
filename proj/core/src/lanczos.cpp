#include "casimir/lanczos.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace casimir::linalg {

double norm_scale(const Eigen::MatrixXcd& H) {
  return H.cwiseAbs().rowwise().sum().maxCoeff();
}

EigenPair lanczos_lowest(const Eigen::MatrixXcd& H, double tol, int max_iter) {
  const Eigen::Index n = H.rows();
  if (n == 0 || H.cols() != n) throw std::invalid_argument("lanczos: matrix must be square, non-empty");
  if (max_iter <= 0) max_iter = static_cast<int>(n);
  max_iter = std::min<int>(max_iter, static_cast<int>(n));
  const double scale = std::max(norm_scale(H), 1e-300);

  // Deterministic start vector with weight on every basis state.
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    v[i] = std::complex<double>(1.0 + 0.1 * std::sin(1.3 * i), 0.05 * std::cos(0.7 * i));
  }
  v.normalize();

  std::vector<Eigen::VectorXcd> basis;
  std::vector<double> alpha;
  std::vector<double> beta;
  EigenPair best;
  best.residual = std::numeric_limits<double>::infinity();
  for (int it = 0; it < max_iter; ++it) {
    basis.push_back(v);
    Eigen::VectorXcd w = H * v;
    alpha.push_back(v.dot(w).real());
    // Full reorthogonalization, applied twice.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) w -= b * b.dot(w);
    }
    const double b_next = w.norm();

    const int m = static_cast<int>(alpha.size());
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      T(i, i) = alpha[static_cast<std::size_t>(i)];
      if (i + 1 < m) T(i, i + 1) = T(i + 1, i) = beta[static_cast<std::size_t>(i)];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
    const Eigen::VectorXd y = es.eigenvectors().col(0);
    const bool done = b_next <= 1e-14 * scale || m == max_iter;
    // Cheap residual estimate |beta_m y_m|; confirm with the true residual.
    if (done || std::abs(b_next * y[m - 1]) <= tol * scale) {
      Eigen::VectorXcd x = Eigen::VectorXcd::Zero(n);
      for (int i = 0; i < m; ++i) x += y[i] * basis[static_cast<std::size_t>(i)];
      x.normalize();
      const double value = (x.dot(H * x)).real();
      const double res = (H * x - value * x).norm();
      if (res < best.residual) best = {value, x, res, m};
      if (res <= tol * scale) return best;
      if (done) break;
    }
    beta.push_back(b_next);
    v = w / b_next;
  }
  char msg[160];
  std::snprintf(msg, sizeof msg, "lanczos: no convergence (residual %.3e, target %.3e)",
                best.residual, tol * scale);
  throw std::runtime_error(msg);
}

EigenPair dense_lowest(const Eigen::MatrixXcd& H) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
  EigenPair out;
  out.value = es.eigenvalues()[0];
  out.vector = es.eigenvectors().col(0);
  out.residual = (H * out.vector - out.value * out.vector).norm();
  out.iterations = static_cast<int>(H.rows());
  return out;
}

}  // namespace casimir::linalg
