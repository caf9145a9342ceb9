#pragma once

#include <array>
#include <cmath>
#include <type_traits>

#include <Eigen/Core>

namespace casimir::engine {

/// int_0^1 y^(p-1) e^(X y) (-ln y)^j dy for j = 0, 1 and p > 0, summed as
/// series of positive terms (Kummer form for X < 0).
std::array<double, 2> kummer_moments(double p, double X);

inline constexpr int kChainNodes = 6;

/// Chebyshev nodes on [0, 1] and the inverse Vandermonde matrix that maps
/// samples at them to monomial coefficients.
struct ChainFit {
  std::array<double, kChainNodes> y{};
  Eigen::Matrix<double, kChainNodes, kChainNodes> inverse;
};

const ChainFit& chain_fit();

/// int_0^inf tau^(power-1) e^(-p tau) g(tau) dtau for power = 1, 2, where
/// g(tau) = e^(X y) P(y), y = e^-tau and P is a polynomial of degree < 6.
/// Exact up to rounding for such g; g may return double or std::complex.
template <class G>
auto laplace_chain(G g, double p, double X, int power) {
  using R = std::decay_t<decltype(g(0.0))>;
  const ChainFit& fit = chain_fit();
  std::array<R, kChainNodes> h;
  for (int i = 0; i < kChainNodes; ++i) {
    h[i] = R(g(-std::log(fit.y[i])) * std::exp(-X * fit.y[i]));
  }
  R out = R(h[0] * 0.0);
  for (int j = 0; j < kChainNodes; ++j) {
    R coef = R(h[0] * 0.0);
    for (int i = 0; i < kChainNodes; ++i) coef += fit.inverse(j, i) * h[i];
    out += coef * kummer_moments(p + j, X)[power - 1];
  }
  return out;
}

}  // namespace casimir::engine
