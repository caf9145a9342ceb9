#include "casimir/vacuum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace casimir::vacuum {

Cutoff::Cutoff(double lambda, double ir_epsilon) : lambda_(lambda), ir_(ir_epsilon) {
  if (std::isnan(lambda) || std::isnan(ir_epsilon) || !(ir_epsilon >= 0.0) ||
      !(ir_epsilon < lambda) || std::isinf(ir_epsilon)) {
    throw std::invalid_argument("cutoff requires 0 <= ir_epsilon < lambda");
  }
}

double bethe_wavenumber(double mass, const units::PhysicalConstants& k) {
  return mass * k.c / k.hbar;
}

double mode_amplitude_squared(double k, double volume, const units::PhysicalConstants& kc) {
  if (!(volume > 0.0)) throw std::invalid_argument("quantization volume must be > 0");
  if (!(k > 0.0)) throw std::invalid_argument("mode wavenumber must be > 0");
  return kc.hbar / (2.0 * kc.eps0 * volume * k * kc.c);
}

std::array<Vec3, 2> polarization_basis(const Vec3& khat) {
  // Reference axis depends only on |components|, so it is the same for -khat.
  Eigen::Index axis = 0;
  khat.cwiseAbs().minCoeff(&axis);
  Vec3 ref = Vec3::Zero();
  ref[axis] = 1.0;
  const Vec3 e1 = khat.cross(ref).normalized();
  const Vec3 e2 = khat.normalized().cross(e1);
  return {e1, e2};
}

double angular_polarization_reduction(const Vec3& u, const Vec3& v) {
  return 8.0 * std::numbers::pi / 3.0 * u.dot(v);
}

double angular_polarization_reduction_numeric(const Vec3& u, const Vec3& v, int n_theta,
                                              int n_phi) {
  const auto rule = quad::sphere_rule(n_theta, n_phi);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.directions.size(); ++i) {
    for (const auto& eps : polarization_basis(rule.directions[i])) {
      sum += rule.weights[i] * eps.dot(u) * eps.dot(v);
    }
  }
  return sum;
}

double mass_integrand(double k, double mass, const units::PhysicalConstants& kc) {
  const double hb = kc.hbar;
  return k / (hb * hb * k * k / (2.0 * mass) + hb * kc.c * k);
}

namespace {

double b_scale(double mass, const units::PhysicalConstants& kc) {
  return 2.0 * mass * kc.c / kc.hbar;
}

// ln((Lambda + b) / (delta + b)), finite Lambda only.
double log_ratio(double lambda, double delta, double b) {
  return std::log1p(lambda / b) - std::log1p(delta / b);
}

}  // namespace

double mass_integral(double mass, const Cutoff& cutoff, const units::PhysicalConstants& kc) {
  if (!(mass > 0.0)) throw std::invalid_argument("mass must be > 0");
  if (cutoff.infinite()) return std::numeric_limits<double>::infinity();
  const double b = b_scale(mass, kc);
  return 2.0 * mass / (kc.hbar * kc.hbar) * log_ratio(cutoff.lambda(), cutoff.ir_epsilon(), b);
}

quad::QuadResult<double> mass_integral_quadrature(double mass, const Cutoff& cutoff,
                                                  const quad::QuadOptions& opts,
                                                  const units::PhysicalConstants& kc) {
  if (cutoff.infinite()) throw std::invalid_argument("mass integral diverges for infinite cutoff");
  // Integrate in x = k / b, where the integrand is smooth on a unit scale, and
  // split at x = 1 so both the linear and logarithmic regimes get nodes.
  const double b = b_scale(mass, kc);
  auto f = [&](double x) { return mass_integrand(x * b, mass, kc) * b; };
  const double lo = cutoff.ir_epsilon() / b;
  const double hi = cutoff.lambda() / b;
  quad::QuadResult<double> total;
  double split = std::clamp(1.0, lo, hi);
  std::array<std::pair<double, double>, 2> parts{{{lo, split}, {split, hi}}};
  for (const auto& [a, c] : parts) {
    if (c <= a) continue;
    double x0 = a;
    // Geometric panels keep each subinterval within a decade.
    while (x0 < c) {
      const double x1 = std::min(c, std::max(x0 * 10.0, x0 + 1.0));
      auto r = quad::integrate(f, x0, x1, opts);
      total.value += r.value;
      total.error += r.error;
      total.evaluations += r.evaluations;
      total.intervals += r.intervals;
      x0 = x1;
    }
  }
  return total;
}

double delta_mass(double mass, const Cutoff& cutoff, double alpha,
                  const units::PhysicalConstants& kc) {
  return 4.0 * alpha / (3.0 * std::numbers::pi) * kc.hbar * kc.hbar *
         mass_integral(mass, cutoff, kc);
}

double reduced_mass_integral(double mass, const Cutoff& cutoff,
                             const units::PhysicalConstants& kc) {
  if (!(mass > 0.0)) throw std::invalid_argument("mass must be > 0");
  if (cutoff.infinite()) return std::numeric_limits<double>::infinity();
  return 2.0 * log_ratio(cutoff.lambda(), cutoff.ir_epsilon(), b_scale(mass, kc));
}

double k1_integral(double m1, double m2, const Cutoff& cutoff,
                   const units::PhysicalConstants& kc) {
  if (!(m1 > 0.0 && m2 > 0.0)) throw std::invalid_argument("masses must be > 0");
  const double b1 = b_scale(m1, kc);
  const double b2 = b_scale(m2, kc);
  const double d = cutoff.ir_epsilon();
  if (cutoff.infinite()) {
    // 2 ln(b1/b2) minus the part below delta.
    const double below = std::log1p(d / b2) - std::log1p(d / b1);
    return 2.0 * (std::log(m1 / m2) - below);
  }
  const double L = cutoff.lambda();
  return 2.0 * (log_ratio(L, d, b2) - log_ratio(L, d, b1));
}

quad::QuadResult<double> k1_integral_quadrature(double m1, double m2, const Cutoff& cutoff,
                                                const quad::QuadOptions& opts,
                                                const units::PhysicalConstants& kc) {
  const double c1 = kc.c * m1 / kc.hbar;
  const double c2 = kc.c * m2 / kc.hbar;
  auto f = [=](double k) {
    return k / (0.5 * k * k + c2 * k) - k / (0.5 * k * k + c1 * k);
  };
  // Geometric panels from delta (or a small fraction of the lighter scale)
  // up to Lambda; the last panel runs to infinity through the mapped rule.
  const double lo_scale = std::min(c1, c2);
  const double hi_scale = std::max(c1, c2);
  quad::QuadResult<double> total;
  auto accumulate = [&](const quad::QuadResult<double>& r) {
    total.value += r.value;
    total.error += r.error;
    total.evaluations += r.evaluations;
    total.intervals += r.intervals;
  };
  double a = cutoff.ir_epsilon();
  double edge = std::max(a, 1e-3 * lo_scale);
  if (edge > a) accumulate(quad::integrate(f, a, std::min(edge, cutoff.lambda()), opts));
  a = std::min(edge, cutoff.lambda());
  const double last = cutoff.infinite() ? 1e3 * hi_scale : cutoff.lambda();
  while (a < last) {
    const double b = std::min(last, a * 10.0);
    accumulate(quad::integrate(f, a, b, opts));
    a = b;
  }
  if (cutoff.infinite()) accumulate(quad::integrate_to_infinity(f, a, opts, a));
  return total;
}

}  // namespace casimir::vacuum
