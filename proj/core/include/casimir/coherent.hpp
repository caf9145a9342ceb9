#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace casimir::coherent {

using cplx = std::complex<double>;
using CVec3 = Eigen::Vector3cd;

/// Polynomial in the three creation operators a^dag_x, a^dag_y, a^dag_z, stored
/// densely up to total degree kMaxDegree.
class Poly {
 public:
  static constexpr int kMaxDegree = 4;

  static Poly one();

  int degree() const { return degree_; }
  cplx coefficient(int ex, int ey, int ez) const { return c_[index(ex, ey, ez)]; }

  Poly times_creation(const CVec3& d) const;         // (d . a^dag) P
  Poly lowered(const CVec3& c, const CVec3& z) const;  // (c . a) acting on P |z>
  Poly scaled_argument(double lambda) const;         // P(lambda a^dag)
  Poly shifted_argument(const CVec3& v) const;       // P(a^dag - v)
  Poly operator*(cplx s) const;
  Poly operator+(const Poly& o) const;
  cplx constant_term() const { return c_[0]; }
  cplx linear_coefficient(int axis) const;

 private:
  static constexpr int kSide = kMaxDegree + 1;
  static constexpr int index(int ex, int ey, int ez) { return (ex * kSide + ey) * kSide + ez; }

  std::array<cplx, kSide * kSide * kSide> c_{};
  int degree_ = 0;
};

/// A ket exp(log_scale) P(a^dag) |z>, where |z> is a normalized coherent state.
/// Operators are applied on the left, so a chain O_n ... O_1 |0> is built by
/// calling the methods in the order O_1, O_2, ..., O_n.
class Ket {
 public:
  Ket();

  /// exp(i q.r) with r = sigma (a + a^dag)/sqrt2 is the displacement D(w),
  /// w = i q sigma / sqrt 2. Pass w directly.
  Ket& displace(const CVec3& w);

  /// exp(-tau N)
  Ket& decay(double tau);

  /// f + c.a + d.a^dag
  Ket& linear(cplx f, const CVec3& c, const CVec3& d);

  /// <0| this
  cplx vacuum_overlap() const;

  /// <0| a_j this for j = x, y, z.
  CVec3 lowered_overlap() const;

 private:
  cplx log_scale_;
  CVec3 z_;
  Poly poly_;
};

/// Displacement parameter for exp(i q.r), q in 1/m and sigma in m.
CVec3 displacement_for(const Eigen::Vector3d& q, double sigma);

}  // namespace casimir::coherent
