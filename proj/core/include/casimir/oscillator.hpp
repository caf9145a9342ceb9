#pragma once

#include <array>
#include <complex>
#include <vector>

#include "casimir/system.hpp"

namespace casimir::osc {

using cplx = std::complex<double>;

/// Fock level (nx, ny, nz) of the isotropic 3D oscillator.
struct OscLevel {
  std::array<int, 3> n{0, 0, 0};

  OscLevel() = default;
  OscLevel(int nx, int ny, int nz);

  int operator[](int axis) const { return n[static_cast<std::size_t>(axis)]; }
  int total() const { return n[0] + n[1] + n[2]; }
  bool operator==(const OscLevel&) const = default;
};

struct OscParams {
  double sigma = 0.0;  // sqrt(hbar / (mu omega0)), m
  double omega0 = 0.0;
  double mu = 0.0;
  double hbar = units::codata2018().hbar;

  static OscParams from_system(const model::OscillatorSystem& sys,
                               const units::PhysicalConstants& k = units::codata2018());
};

/// All levels with nx + ny + nz <= n_max, ordered by total N then lexicographically.
std::vector<OscLevel> levels_up_to(int n_max);

/// All levels with every component <= n_axis.
std::vector<OscLevel> levels_per_axis(int n_axis);

// One-dimensional building blocks, x in units of sigma (dimensionless
// displacement z = i q sigma / sqrt(2)).

/// <m| exp(i q x) |n> for a single axis.
cplx plane_wave_1d(double q_sigma, int m, int n);

/// <m| x |n> / sigma.
double position_1d(int m, int n);

/// <m| p |n> / (hbar / sigma).
cplx momentum_1d(int m, int n);

/// <phi_l| exp(i k.r) |phi_0>
cplx plane_wave_element(const OscParams& params, const Vec3& k, const OscLevel& l);

/// <phi_l| exp(i k.r) |phi_s>
cplx plane_wave_element(const OscParams& params, const Vec3& k, const OscLevel& l,
                        const OscLevel& s);

/// <phi_l| r_axis |phi_s>, metres.
double position_element(const OscParams& params, const OscLevel& l, const OscLevel& s, int axis);

/// <phi_l| p_axis |phi_s>, kg m/s. Ladder convention a|n> = sqrt(n)|n-1>,
/// p = i hbar (a^dag - a) / (sigma sqrt 2).
cplx momentum_element(const OscParams& params, const OscLevel& l, const OscLevel& s, int axis);

/// <phi_l| (c.r + d.p) exp(i k.r) |phi_s> with complex coefficient vectors.
cplx linear_plane_wave_element(const OscParams& params, const Eigen::Vector3cd& c_r,
                               const Eigen::Vector3cd& d_p, const Vec3& k, const OscLevel& l,
                               const OscLevel& s);

/// Smallest total level N such that the Poisson tail
/// exp(-x) x^N / N! (x = k^2 sigma^2 / 2) drops below tail_bound.
int default_truncation(double k_sigma, double tail_bound = 1e-12);

/// Partial sums S_N = sum_{|l| <= N} |<phi_l|exp(ik.r)|phi_0>|^2 for N = 0..n_max.
std::vector<double> completeness_partial_sums(const OscParams& params, const Vec3& k, int n_max);

}  // namespace casimir::osc
