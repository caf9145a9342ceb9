#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace casimir::quad {

struct QuadOptions {
  double abs_tol = 0.0;
  double rel_tol = 1e-10;
  int max_subdivisions = 4000;
};

template <class V>
struct QuadResult {
  V value{};
  double error = 0.0;
  int evaluations = 0;
  int intervals = 0;
};

/// Raised when the subdivision budget runs out before the tolerance is met.
/// Carries the best estimate and its error.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double best_magnitude, double achieved_error)
      : std::runtime_error(what), best_(best_magnitude), error_(achieved_error) {}
  double best_magnitude() const { return best_; }
  double achieved_error() const { return error_; }

 private:
  double best_;
  double error_;
};

namespace detail {

// Gauss-Kronrod 7/15 abscissae and weights (QUADPACK qk15).
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }
template <class Derived>
double magnitude(const Eigen::MatrixBase<Derived>& v) {
  return v.norm();
}

template <class V>
V zero_like(const V& sample) {
  if constexpr (std::is_arithmetic_v<V>) {
    return V{0};
  } else if constexpr (std::is_same_v<V, std::complex<double>>) {
    return V{0.0, 0.0};
  } else {
    V z = sample;
    z.setZero();
    return z;
  }
}

template <class V>
struct Segment {
  double a;
  double b;
  V value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
auto gk15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  auto fc = f(center);
  using V = std::decay_t<decltype(fc)>;
  std::array<V, 15> fv{};
  fv[14] = fc;
  V resk = fc * kWgk[7];
  V resg = fc * kWg[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv[2 * j] = f(center - dx);
    fv[2 * j + 1] = f(center + dx);
    V s = fv[2 * j] + fv[2 * j + 1];
    resk += s * kWgk[j];
    if (j % 2 == 1) resg += s * kWg[j / 2];
  }
  // QUADPACK error heuristics: rescale by the spread of f and floor at
  // roundoff in the sum of |f|.
  const V mean = resk * 0.5;
  double resabs = kWgk[7] * magnitude(fc);
  double resasc = kWgk[7] * magnitude(V(fc - mean));
  for (std::size_t j = 0; j < 7; ++j) {
    resabs += kWgk[j] * (magnitude(fv[2 * j]) + magnitude(fv[2 * j + 1]));
    resasc += kWgk[j] * (magnitude(V(fv[2 * j] - mean)) + magnitude(V(fv[2 * j + 1] - mean)));
  }
  const double scale = std::abs(half);
  resabs *= scale;
  resasc *= scale;
  V value = resk * half;
  V gauss = resg * half;
  double err = magnitude(V(value - gauss));
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
  return Segment<V>{a, b, value, err};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
/// The integrand may return double, std::complex<double> or a fixed-size Eigen
/// vector. Stops when error <= max(abs_tol, rel_tol |value|).
template <class F>
auto integrate(F f, double a, double b, const QuadOptions& opts = {}) {
  using V = std::decay_t<decltype(detail::gk15(f, a, b).value)>;
  QuadResult<V> out;
  if (!(opts.abs_tol > 0.0 || opts.rel_tol > 0.0)) {
    throw std::invalid_argument("integrate: need a positive tolerance");
  }
  if (a == b) {
    out.value = detail::zero_like(f(a));
    return out;
  }
  std::priority_queue<detail::Segment<V>> heap;
  auto first = detail::gk15(f, a, b);
  out.evaluations = 15;
  V total = first.value;
  double total_err = first.error;
  double total_abs = detail::magnitude(first.value);
  heap.push(first);
  int subdivisions = 0;
  // Floor at a few ulps of the summed segment magnitudes so that integrals
  // which cancel to zero terminate.
  auto tolerance = [&] {
    return std::max({opts.abs_tol, opts.rel_tol * detail::magnitude(total),
                     64.0 * std::numeric_limits<double>::epsilon() * total_abs});
  };
  while (total_err > tolerance()) {
    if (subdivisions >= opts.max_subdivisions) {
      char msg[128];
      std::snprintf(msg, sizeof msg,
                    "integrate: subdivision limit reached (estimate %.6e, error %.6e)",
                    detail::magnitude(total), total_err);
      throw QuadratureError(msg, detail::magnitude(total), total_err);
    }
    auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw QuadratureError("integrate: interval underflow", detail::magnitude(total), total_err);
    }
    auto left = detail::gk15(f, worst.a, mid);
    auto right = detail::gk15(f, mid, worst.b);
    out.evaluations += 30;
    ++subdivisions;
    total = total - worst.value + left.value + right.value;
    total_err += left.error + right.error - worst.error;
    total_abs += detail::magnitude(left.value) + detail::magnitude(right.value) -
                 detail::magnitude(worst.value);
    heap.push(left);
    heap.push(right);
  }
  // Final sum in interval order so results do not depend on heap layout.
  std::vector<detail::Segment<V>> segs;
  segs.reserve(heap.size());
  while (!heap.empty()) {
    segs.push_back(heap.top());
    heap.pop();
  }
  std::sort(segs.begin(), segs.end(), [](const auto& x, const auto& y) { return x.a < y.a; });
  total = detail::zero_like(first.value);
  total_err = 0.0;
  for (const auto& s : segs) {
    total = total + s.value;
    total_err += s.error;
  }
  out.value = total;
  out.error = total_err;
  out.intervals = static_cast<int>(segs.size());
  return out;
}

/// Integral over [a, inf) through the map x = a + t / (1 - t), t in [0, 1).
/// The integrand must decay faster than 1/x.
template <class F>
auto integrate_to_infinity(F f, double a, const QuadOptions& opts = {}, double scale = 1.0) {
  using R = std::decay_t<decltype(f(a))>;
  auto mapped = [&](double t) -> R {
    const double one_minus = 1.0 - t;
    const double x = a + scale * t / one_minus;
    return f(x) * (scale / (one_minus * one_minus));
  };
  return integrate(mapped, 0.0, 1.0, opts);
}

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendre gauss_legendre(int n);

/// Product rule on the unit sphere: Gauss-Legendre in cos(theta) times a
/// uniform grid in phi. Exact for polynomials of degree < min(2 n_theta, n_phi).
struct SphereRule {
  std::vector<Eigen::Vector3d> directions;
  std::vector<double> weights;  // sum to 4 pi
};

/// Built so that directions come in antipodal pairs (index i and i + size/2).
SphereRule sphere_rule(int n_theta, int n_phi);

}  // namespace casimir::quad
