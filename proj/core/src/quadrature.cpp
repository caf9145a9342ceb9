#include "casimir/quadrature.hpp"

#include <numbers>

namespace casimir::quad {

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  GaussLegendre gl;
  gl.nodes.assign(static_cast<std::size_t>(n), 0.0);
  gl.weights.assign(static_cast<std::size_t>(n), 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * x * p2 - (j - 1.0) * p3) / j;
      }
      dp = n * (x * p1 - p2) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    gl.nodes[lo] = -x;
    gl.nodes[hi] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    gl.weights[lo] = w;
    gl.weights[hi] = w;
  }
  if (n % 2 == 1) gl.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return gl;
}

SphereRule sphere_rule(int n_theta, int n_phi) {
  if (n_phi < 2 || n_phi % 2 != 0) {
    throw std::invalid_argument("sphere_rule: n_phi must be even and >= 2");
  }
  const auto gl = gauss_legendre(n_theta);
  const double dphi = 2.0 * std::numbers::pi / n_phi;
  SphereRule rule;
  auto add = [&](double ct, double w, int j) {
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    const double phi = (j + 0.5) * dphi;
    rule.directions.emplace_back(st * std::cos(phi), st * std::sin(phi), ct);
    rule.weights.push_back(w * dphi);
  };
  // Half of the sphere first; the second half is the exact negation so that
  // odd integrands cancel pairwise.
  for (int i = 0; i < n_theta / 2; ++i) {
    for (int j = 0; j < n_phi; ++j) add(gl.nodes[static_cast<std::size_t>(i)],
                                        gl.weights[static_cast<std::size_t>(i)], j);
  }
  if (n_theta % 2 == 1) {
    const auto mid = static_cast<std::size_t>(n_theta / 2);
    for (int j = 0; j < n_phi / 2; ++j) add(0.0, gl.weights[mid], j);
  }
  const std::size_t half = rule.directions.size();
  for (std::size_t i = 0; i < half; ++i) {
    rule.directions.push_back(-rule.directions[i]);
    rule.weights.push_back(rule.weights[i]);
  }
  return rule;
}

}  // namespace casimir::quad
