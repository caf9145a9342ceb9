#include "casimir/oscillator_oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "casimir/quadrature.hpp"

namespace casimir::osc {

OperatorSpec OperatorSpec::plane_wave(const Vec3& k) {
  OperatorSpec op;
  op.k = k;
  return op;
}

OperatorSpec OperatorSpec::position(int axis) {
  OperatorSpec op;
  op.scalar = 0.0;
  op.c_r[axis] = 1.0;
  return op;
}

OperatorSpec OperatorSpec::momentum(int axis) {
  OperatorSpec op;
  op.scalar = 0.0;
  op.d_p[axis] = 1.0;
  return op;
}

double hermite_function(int n, double xi) {
  double prev = 0.0;
  double cur = std::exp(-0.5 * xi * xi) / std::pow(std::numbers::pi, 0.25);
  for (int j = 0; j < n; ++j) {
    const double next = std::sqrt(2.0 / (j + 1.0)) * xi * cur - std::sqrt(j / (j + 1.0)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

double hermite_derivative(int n, double xi) {
  // psi_n' = sqrt(n/2) psi_{n-1} - sqrt((n+1)/2) psi_{n+1}
  double d = -std::sqrt((n + 1.0) / 2.0) * hermite_function(n + 1, xi);
  if (n > 0) d += std::sqrt(n / 2.0) * hermite_function(n - 1, xi);
  return d;
}

enum class Factor { kOne, kXi, kDerivative };

// int psi_m(xi) exp(i q xi) F[psi_n](xi) dxi
cplx axis_integral(double q, Factor factor, int m, int n, double tol) {
  const double L = std::sqrt(2.0 * std::max(m, n) + 1.0) + 12.0;
  auto f = [&](double xi) -> cplx {
    double right = 0.0;
    switch (factor) {
      case Factor::kOne: right = hermite_function(n, xi); break;
      case Factor::kXi: right = xi * hermite_function(n, xi); break;
      case Factor::kDerivative: right = hermite_derivative(n, xi); break;
    }
    return hermite_function(m, xi) * right * std::exp(cplx(0.0, q * xi));
  };
  quad::QuadOptions opts;
  opts.abs_tol = tol;
  opts.rel_tol = 0.0;
  opts.max_subdivisions = 2000;
  return quad::integrate(f, -L, L, opts).value;
}

}  // namespace

cplx numeric_element_oracle(const OscParams& params, const OperatorSpec& op, const OscLevel& l,
                            const OscLevel& s, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("oracle tolerance must be > 0");
  if (l.total() > 12 || s.total() > 12) {
    throw std::invalid_argument("oracle supports levels with N <= 12");
  }
  const double t = tol / 8.0;
  std::array<cplx, 3> plain{};
  for (int a = 0; a < 3; ++a) {
    plain[static_cast<std::size_t>(a)] =
        axis_integral(op.k[a] * params.sigma, Factor::kOne, l[a], s[a], t);
  }
  auto product_except = [&](int skip) {
    cplx p(1.0, 0.0);
    for (int b = 0; b < 3; ++b) {
      if (b != skip) p *= plain[static_cast<std::size_t>(b)];
    }
    return p;
  };
  cplx total = op.scalar * product_except(-1);
  for (int a = 0; a < 3; ++a) {
    const double q = op.k[a] * params.sigma;
    if (op.c_r[a] != cplx(0.0)) {
      // Position operator multiplies the wavefunction; x = sigma xi.
      total += op.c_r[a] * params.sigma * axis_integral(q, Factor::kXi, l[a], s[a], t) *
               product_except(a);
    }
    if (op.d_p[a] != cplx(0.0)) {
      // p = -i (hbar / sigma) d/dxi acting on psi_s, to the right of exp(i k.r)
      // as in (d.p) exp(i k.r): p exp(iqxi) psi = exp(iqxi) (hbar q/sigma + p) psi.
      const cplx deriv = axis_integral(q, Factor::kDerivative, l[a], s[a], t);
      const cplx shift = axis_integral(q, Factor::kOne, l[a], s[a], t);
      const cplx elem = (params.hbar / params.sigma) * (cplx(0.0, -1.0) * deriv + q * shift);
      total += op.d_p[a] * elem * product_except(a);
    }
  }
  return total;
}

}  // namespace casimir::osc
