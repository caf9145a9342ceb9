#include "casimir/oscillator.hpp"

#include <cmath>
#include <stdexcept>

namespace casimir::osc {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Generalized Laguerre polynomial L_n^{(a)}(x) by upward recurrence.
double laguerre(int n, int a, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + a - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + a - x) * cur - (k + a) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

void check_level(const OscLevel& l) {
  for (int v : l.n) {
    if (v < 0) throw std::invalid_argument("oscillator level components must be >= 0");
  }
}

}  // namespace

OscLevel::OscLevel(int nx, int ny, int nz) : n{nx, ny, nz} { check_level(*this); }

OscParams OscParams::from_system(const model::OscillatorSystem& sys,
                                 const units::PhysicalConstants& k) {
  OscParams p;
  p.mu = sys.reduced_mass();
  p.omega0 = sys.omega0();
  p.hbar = k.hbar;
  p.sigma = std::sqrt(k.hbar / (p.mu * p.omega0));
  return p;
}

std::vector<OscLevel> levels_up_to(int n_max) {
  std::vector<OscLevel> out;
  for (int N = 0; N <= n_max; ++N) {
    for (int nx = N; nx >= 0; --nx) {
      for (int ny = N - nx; ny >= 0; --ny) {
        out.emplace_back(nx, ny, N - nx - ny);
      }
    }
  }
  return out;
}

std::vector<OscLevel> levels_per_axis(int n_axis) {
  std::vector<OscLevel> out;
  for (int N = 0; N <= 3 * n_axis; ++N) {
    for (int nx = std::min(N, n_axis); nx >= 0; --nx) {
      for (int ny = std::min(N - nx, n_axis); ny >= 0; --ny) {
        const int nz = N - nx - ny;
        if (nz <= n_axis) out.emplace_back(nx, ny, nz);
      }
    }
  }
  return out;
}

cplx plane_wave_1d(double q_sigma, int m, int n) {
  // D(z) with z = i q sigma / sqrt 2; for purely imaginary z both orderings
  // reduce to sqrt(min!/max!) z^|m-n| exp(-|z|^2/2) L_min^{|m-n|}(|z|^2).
  const int lo = std::min(m, n);
  const int d = std::abs(m - n);
  const double y = q_sigma * kInvSqrt2;
  const double x = y * y;
  double ratio = 1.0;
  for (int j = lo + 1; j <= lo + d; ++j) ratio /= j;
  const cplx z(0.0, y);
  cplx zp(1.0, 0.0);
  for (int j = 0; j < d; ++j) zp *= z;
  return std::sqrt(ratio) * zp * std::exp(-0.5 * x) * laguerre(lo, d, x);
}

double position_1d(int m, int n) {
  if (m == n + 1) return std::sqrt(static_cast<double>(m)) * kInvSqrt2;
  if (n == m + 1) return std::sqrt(static_cast<double>(n)) * kInvSqrt2;
  return 0.0;
}

cplx momentum_1d(int m, int n) {
  // i (a^dag - a) / sqrt 2
  if (m == n + 1) return {0.0, std::sqrt(static_cast<double>(m)) * kInvSqrt2};
  if (n == m + 1) return {0.0, -std::sqrt(static_cast<double>(n)) * kInvSqrt2};
  return {0.0, 0.0};
}

cplx plane_wave_element(const OscParams& params, const Vec3& k, const OscLevel& l) {
  return plane_wave_element(params, k, l, OscLevel{});
}

cplx plane_wave_element(const OscParams& params, const Vec3& k, const OscLevel& l,
                        const OscLevel& s) {
  cplx out(1.0, 0.0);
  for (int a = 0; a < 3; ++a) out *= plane_wave_1d(k[a] * params.sigma, l[a], s[a]);
  return out;
}

namespace {

bool others_equal(const OscLevel& l, const OscLevel& s, int axis) {
  for (int a = 0; a < 3; ++a) {
    if (a != axis && l[a] != s[a]) return false;
  }
  return true;
}

}  // namespace

double position_element(const OscParams& params, const OscLevel& l, const OscLevel& s, int axis) {
  if (axis < 0 || axis > 2) throw std::out_of_range("axis must be 0, 1 or 2");
  if (!others_equal(l, s, axis)) return 0.0;
  return params.sigma * position_1d(l[axis], s[axis]);
}

cplx momentum_element(const OscParams& params, const OscLevel& l, const OscLevel& s, int axis) {
  if (axis < 0 || axis > 2) throw std::out_of_range("axis must be 0, 1 or 2");
  if (!others_equal(l, s, axis)) return 0.0;
  return params.hbar / params.sigma * momentum_1d(l[axis], s[axis]);
}

cplx linear_plane_wave_element(const OscParams& params, const Eigen::Vector3cd& c_r,
                               const Eigen::Vector3cd& d_p, const Vec3& k, const OscLevel& l,
                               const OscLevel& s) {
  // Insert the ladder resolution on the operator axis: the linear operator
  // only connects l to intermediate levels that differ by one quantum there.
  cplx total(0.0, 0.0);
  for (int a = 0; a < 3; ++a) {
    if (c_r[a] == cplx(0.0) && d_p[a] == cplx(0.0)) continue;
    cplx others(1.0, 0.0);
    for (int b = 0; b < 3; ++b) {
      if (b != a) others *= plane_wave_1d(k[b] * params.sigma, l[b], s[b]);
    }
    if (others == cplx(0.0)) continue;
    cplx axis_sum(0.0, 0.0);
    for (int m : {l[a] - 1, l[a] + 1}) {
      if (m < 0) continue;
      const cplx op = c_r[a] * params.sigma * position_1d(l[a], m) +
                      d_p[a] * (params.hbar / params.sigma) * momentum_1d(l[a], m);
      axis_sum += op * plane_wave_1d(k[a] * params.sigma, m, s[a]);
    }
    total += others * axis_sum;
  }
  return total;
}

int default_truncation(double k_sigma, double tail_bound) {
  const double x = 0.5 * k_sigma * k_sigma;
  // Poisson weights exp(-x) x^N / N!; walk until past the mode and below bound.
  double log_w = -x;
  for (int N = 0; N < 100000; ++N) {
    if (N > 0) log_w += std::log(x) - std::log(static_cast<double>(N));
    if (x == 0.0) return 0;
    if (N >= x && log_w < std::log(tail_bound)) return N;
  }
  throw std::runtime_error("default_truncation: no truncation level found");
}

std::vector<double> completeness_partial_sums(const OscParams& params, const Vec3& k, int n_max) {
  std::vector<double> sums(static_cast<std::size_t>(n_max) + 1, 0.0);
  double running = 0.0;
  std::size_t idx = 0;
  for (const auto& l : levels_up_to(n_max)) {
    while (static_cast<int>(idx) < l.total()) {
      sums[idx] = running;
      ++idx;
    }
    running += std::norm(plane_wave_element(params, k, l));
  }
  for (; idx < sums.size(); ++idx) sums[idx] = running;
  return sums;
}

}  // namespace casimir::osc
