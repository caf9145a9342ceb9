#pragma once

#include <array>
#include <cmath>
#include <limits>

#include "casimir/constants.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/system.hpp"

namespace casimir::vacuum {

/// UV wavenumber cutoff Lambda and IR lower limit delta, both in 1/m.
/// Lambda may be +infinity for integrals that converge in the UV.
class Cutoff {
 public:
  explicit Cutoff(double lambda, double ir_epsilon = 0.0);

  double lambda() const { return lambda_; }
  double ir_epsilon() const { return ir_; }
  bool infinite() const { return std::isinf(lambda_); }

  static Cutoff infinite_cutoff() { return Cutoff(std::numeric_limits<double>::infinity()); }

 private:
  double lambda_;
  double ir_;
};

/// Bethe's nonrelativistic cutoff m c / hbar.
double bethe_wavenumber(double mass, const units::PhysicalConstants& k = units::codata2018());

/// A_k^2 = hbar / (2 eps0 V k c) for quantization volume V.
double mode_amplitude_squared(double k, double volume,
                              const units::PhysicalConstants& kc = units::codata2018());

/// Unit polarization vectors orthogonal to khat. For -khat the first vector is
/// the exact negation and the second is unchanged.
std::array<Vec3, 2> polarization_basis(const Vec3& khat);

/// Integral over directions of sum_eps (eps.u)(eps.v) = (8 pi / 3) u.v.
double angular_polarization_reduction(const Vec3& u, const Vec3& v);

/// The same integral evaluated on a sphere product rule.
double angular_polarization_reduction_numeric(const Vec3& u, const Vec3& v, int n_theta = 8,
                                              int n_phi = 16);

/// k / (hbar^2 k^2 / 2m + hbar c k)
double mass_integrand(double k, double mass, const units::PhysicalConstants& kc = units::codata2018());

/// (2m / hbar^2) ln(1 + hbar Lambda / 2 m c), integrated from delta.
double mass_integral(double mass, const Cutoff& cutoff,
                     const units::PhysicalConstants& kc = units::codata2018());

quad::QuadResult<double> mass_integral_quadrature(
    double mass, const Cutoff& cutoff, const quad::QuadOptions& opts = {},
    const units::PhysicalConstants& kc = units::codata2018());

/// delta m = (4 alpha / 3 pi) hbar^2 I(Lambda) = (8 alpha / 3 pi) m ln(1 + hbar Lambda / 2 m c).
double delta_mass(double mass, const Cutoff& cutoff, double alpha,
                  const units::PhysicalConstants& kc = units::codata2018());

/// The per-particle log integral J(m) = int k dk / (k^2/2 + c k m / hbar)
/// = 2 ln((Lambda + b) / (delta + b)), b = 2 m c / hbar. Equals hbar^2 I / m.
double reduced_mass_integral(double mass, const Cutoff& cutoff,
                             const units::PhysicalConstants& kc = units::codata2018());

/// int_delta^Lambda dk [k/(k^2/2 + c k m2/hbar) - k/(k^2/2 + c k m1/hbar)];
/// tends to 2 ln(m1/m2) as Lambda -> infinity.
double k1_integral(double m1, double m2, const Cutoff& cutoff,
                   const units::PhysicalConstants& kc = units::codata2018());

quad::QuadResult<double> k1_integral_quadrature(
    double m1, double m2, const Cutoff& cutoff, const quad::QuadOptions& opts = {},
    const units::PhysicalConstants& kc = units::codata2018());

}  // namespace casimir::vacuum
