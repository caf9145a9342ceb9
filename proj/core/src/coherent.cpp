#include "casimir/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace casimir::coherent {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Loops over exponents with total degree <= deg.
template <class F>
void for_each_exponent(int deg, F f) {
  for (int i = 0; i <= deg; ++i) {
    for (int j = 0; j <= deg - i; ++j) {
      for (int k = 0; k <= deg - i - j; ++k) f(i, j, k);
    }
  }
}

}  // namespace

Poly Poly::one() {
  Poly p;
  p.c_[0] = 1.0;
  return p;
}

Poly Poly::times_creation(const CVec3& d) const {
  if (degree_ >= kMaxDegree) throw std::length_error("Poly: degree limit exceeded");
  Poly out;
  out.degree_ = degree_ + 1;
  for_each_exponent(degree_, [&](int i, int j, int k) {
    const cplx t = c_[index(i, j, k)];
    if (t == cplx(0.0)) return;
    out.c_[index(i + 1, j, k)] += t * d[0];
    out.c_[index(i, j + 1, k)] += t * d[1];
    out.c_[index(i, j, k + 1)] += t * d[2];
  });
  return out;
}

Poly Poly::lowered(const CVec3& c, const CVec3& z) const {
  // a_j P(a^dag)|z> = (dP/da^dag_j + z_j P)|z>
  Poly out;
  out.degree_ = degree_;
  const cplx cz = (c.transpose() * z)(0);
  for_each_exponent(degree_, [&](int i, int j, int k) {
    const cplx t = c_[index(i, j, k)];
    if (t == cplx(0.0)) return;
    out.c_[index(i, j, k)] += t * cz;
    if (i > 0) out.c_[index(i - 1, j, k)] += t * c[0] * static_cast<double>(i);
    if (j > 0) out.c_[index(i, j - 1, k)] += t * c[1] * static_cast<double>(j);
    if (k > 0) out.c_[index(i, j, k - 1)] += t * c[2] * static_cast<double>(k);
  });
  return out;
}

Poly Poly::scaled_argument(double lambda) const {
  Poly out = *this;
  std::array<double, kSide> pw{};
  pw[0] = 1.0;
  for (int n = 1; n < kSide; ++n) pw[n] = pw[n - 1] * lambda;
  for_each_exponent(degree_, [&](int i, int j, int k) { out.c_[index(i, j, k)] *= pw[i + j + k]; });
  return out;
}

Poly Poly::shifted_argument(const CVec3& v) const {
  // One axis at a time: x^n -> (x - v)^n, applied in place by repeated
  // synthetic division (Taylor shift), highest power first.
  Poly out = *this;
  for (int axis = 0; axis < 3; ++axis) {
    const cplx s = -v[axis];
    if (s == cplx(0.0)) continue;
    for (int a = 0; a <= degree_; ++a) {
      for (int b = 0; b <= degree_ - a; ++b) {
        const int n = degree_ - a - b;
        auto at = [&](int e) -> cplx& {
          if (axis == 0) return out.c_[index(e, a, b)];
          if (axis == 1) return out.c_[index(a, e, b)];
          return out.c_[index(a, b, e)];
        };
        for (int i = 0; i < n; ++i) {
          for (int e = n - 1; e >= i; --e) at(e) += s * at(e + 1);
        }
      }
    }
  }
  return out;
}

Poly Poly::operator*(cplx s) const {
  Poly out = *this;
  for_each_exponent(degree_, [&](int i, int j, int k) { out.c_[index(i, j, k)] *= s; });
  return out;
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  out.degree_ = std::max(degree_, o.degree_);
  for_each_exponent(o.degree_, [&](int i, int j, int k) { out.c_[index(i, j, k)] += o.c_[index(i, j, k)]; });
  return out;
}

cplx Poly::linear_coefficient(int axis) const {
  if (degree_ < 1) return {0.0, 0.0};
  return axis == 0 ? c_[index(1, 0, 0)] : axis == 1 ? c_[index(0, 1, 0)] : c_[index(0, 0, 1)];
}

Ket::Ket() : log_scale_(0.0, 0.0), z_(CVec3::Zero()), poly_(Poly::one()) {}

Ket& Ket::displace(const CVec3& w) {
  // D(w) P(a^dag) |z> = P(a^dag - w*) D(w)|z>,
  // D(w)|z> = exp((w.z* - w*.z)/2) |z + w>.
  const cplx wz = (w.transpose() * z_.conjugate())(0);
  const cplx wcz = (w.conjugate().transpose() * z_)(0);
  log_scale_ += 0.5 * (wz - wcz);
  poly_ = poly_.shifted_argument(w.conjugate());
  z_ += w;
  return *this;
}

Ket& Ket::decay(double tau) {
  // exp(-tau N) |z> = exp(-|z|^2 (1 - e^{-2 tau}) / 2) |z e^{-tau}>
  const double shrink = std::exp(-tau);
  log_scale_ += 0.5 * z_.squaredNorm() * std::expm1(-2.0 * tau);
  poly_ = poly_.scaled_argument(shrink);
  z_ *= shrink;
  return *this;
}

Ket& Ket::linear(cplx f, const CVec3& c, const CVec3& d) {
  Poly next = poly_ * f;
  if (!c.isZero(0.0)) next = next + poly_.lowered(c, z_);
  if (!d.isZero(0.0)) next = next + poly_.times_creation(d);
  poly_ = next;
  return *this;
}

cplx Ket::vacuum_overlap() const {
  // <0| P(a^dag) |z> = P(0) exp(-|z|^2/2)
  return std::exp(log_scale_ - 0.5 * z_.squaredNorm()) * poly_.constant_term();
}

CVec3 Ket::lowered_overlap() const {
  // <0| a_j P(a^dag) |z> = (dP/da^dag_j (0) + z_j P(0)) exp(-|z|^2/2)
  const cplx scale = std::exp(log_scale_ - 0.5 * z_.squaredNorm());
  const cplx p0 = poly_.constant_term();
  CVec3 out;
  for (int j = 0; j < 3; ++j) out[j] = scale * (poly_.linear_coefficient(j) + z_[j] * p0);
  return out;
}

CVec3 displacement_for(const Eigen::Vector3d& q, double sigma) {
  return CVec3(q.cast<cplx>() * cplx(0.0, sigma * kInvSqrt2));
}

}  // namespace casimir::coherent
