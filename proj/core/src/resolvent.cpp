#include "casimir/resolvent.hpp"

#include <numbers>
#include <Eigen/LU>
#include <stdexcept>

namespace casimir::engine {

std::array<double, 2> kummer_moments(double p, double X) {
  if (!(p > 0.0)) throw std::invalid_argument("kummer_moments: p must be > 0");
  if (X >= 0.0) {
    double power = 1.0;
    double i0 = 1.0 / p;
    double i1 = 1.0 / (p * p);
    for (int n = 1; n < 100000; ++n) {
      power *= X / n;
      i0 += power / (p + n);
      i1 += power / ((p + n) * (p + n));
      if (n > X && power < 1e-17 * i0 * (p + n)) break;
    }
    return {i0, i1};
  }
  const double x = -X;
  double term = 1.0 / p;
  double harmonic = 1.0 / p;
  double i0 = term;
  double i1 = term * harmonic;
  for (int n = 1; n < 100000; ++n) {
    term *= x / (p + n);
    harmonic += 1.0 / (p + n);
    i0 += term;
    i1 += term * harmonic;
    if (n > x - p && term < 1e-17 * i0) break;
  }
  const double scale = std::exp(-x);
  return {scale * i0, scale * i1};
}

const ChainFit& chain_fit() {
  static const ChainFit fit = [] {
    ChainFit f;
    Eigen::Matrix<double, kChainNodes, kChainNodes> v;
    for (int i = 0; i < kChainNodes; ++i) {
      f.y[i] = 0.5 * (1.0 + std::cos((2.0 * i + 1.0) * std::numbers::pi / (2.0 * kChainNodes)));
      for (int j = 0; j < kChainNodes; ++j) v(i, j) = std::pow(f.y[i], j);
    }
    f.inverse = v.inverse();
    return f;
  }();
  return fit;
}

}  // namespace casimir::engine
