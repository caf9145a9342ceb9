#pragma once

#include "casimir/oscillator.hpp"

namespace casimir::osc {

/// Operator whose matrix element the quadrature oracle evaluates:
/// (c.r + d.p + scalar) exp(i k.r). The identity is scalar = 1 with k = 0.
struct OperatorSpec {
  cplx scalar{1.0, 0.0};
  Eigen::Vector3cd c_r = Eigen::Vector3cd::Zero();
  Eigen::Vector3cd d_p = Eigen::Vector3cd::Zero();
  Vec3 k = Vec3::Zero();

  static OperatorSpec identity() { return {}; }
  static OperatorSpec plane_wave(const Vec3& k);
  static OperatorSpec position(int axis);
  static OperatorSpec momentum(int axis);
};

/// Normalized Hermite function psi_n(xi), xi = x / sigma.
double hermite_function(int n, double xi);

/// Matrix element <phi_l| O |phi_s> by adaptive quadrature over explicit
/// Hermite-function wavefunctions. Levels must have N <= 12. Throws
/// quad::QuadratureError when the tolerance cannot be reached.
cplx numeric_element_oracle(const OscParams& params, const OperatorSpec& op, const OscLevel& l,
                            const OscLevel& s, double tol = 1e-12);

}  // namespace casimir::osc
