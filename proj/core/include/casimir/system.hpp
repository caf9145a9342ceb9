#pragma once

#include <Eigen/Dense>

#include "casimir/constants.hpp"

namespace casimir {

using Vec3 = Eigen::Vector3d;

namespace model {

/// Two opposite charges (+e on particle 1, -e on particle 2) bound by an
/// isotropic harmonic potential of angular frequency omega0.
class OscillatorSystem {
 public:
  /// Throws std::invalid_argument unless every argument is finite and > 0.
  OscillatorSystem(double m1, double m2, double e_charge, double omega0);

  double m1() const { return m1_; }
  double m2() const { return m2_; }
  double charge() const { return e_; }
  double omega0() const { return omega0_; }

  double total_mass() const { return m1_ + m2_; }
  double reduced_mass() const { return m1_ * m2_ / (m1_ + m2_); }

  /// Same system with the two masses exchanged.
  OscillatorSystem swapped() const { return {m2_, m1_, e_, omega0_}; }

 private:
  double m1_;
  double m2_;
  double e_;
  double omega0_;
};

/// Static, homogeneous external fields.
struct FieldConfig {
  Vec3 E0 = Vec3::Zero();  // V/m
  Vec3 B0 = Vec3::Zero();  // T

  Vec3 cross() const { return E0.cross(B0); }
  bool finite() const { return E0.allFinite() && B0.allFinite(); }
};

struct DerivedQuantities {
  double M = 0.0;
  double mu = 0.0;
  double alpha0 = 0.0;  // C^2 s^2 / kg
  double sigma = 0.0;   // ground-state width sqrt(hbar / mu omega0), m
  Vec3 r0 = Vec3::Zero();
  Vec3 p0 = Vec3::Zero();
  Vec3 Q0 = Vec3::Zero();
};

/// System with m1 = m_p, m2 = m_e and hbar omega0 given in eV.
OscillatorSystem hydrogen_like(double hbar_omega0_eV = 10.0,
                               const units::PhysicalConstants& k = units::codata2018());

/// e^2 / (mu omega0^2)
double static_polarizability(const OscillatorSystem& sys);

/// sqrt(hbar / (mu omega0))
double ground_state_width(const OscillatorSystem& sys,
                          const units::PhysicalConstants& k = units::codata2018());

/// M v - alpha(0) E0 x B0
Vec3 classical_pseudo_momentum(const OscillatorSystem& sys, const FieldConfig& fields,
                               const Vec3& v);

/// Kinetic velocity that belongs to a pseudo-momentum eigenvalue Q0.
Vec3 velocity_from_pseudo_momentum(const OscillatorSystem& sys, const FieldConfig& fields,
                                   const Vec3& Q0);

/// Shift of the internal wavefunction, e^-1 alpha(0) (E0 + Q0 x B0 / M).
Vec3 displacement_r0(const OscillatorSystem& sys, const FieldConfig& fields, const Vec3& Q0);

/// Shift of the reduced momentum, (m2 - m1)/(2M) alpha(0) E0 x B0.
Vec3 momentum_shift_p0(const OscillatorSystem& sys, const FieldConfig& fields);

/// e |B0| a^2 / hbar. Estimates the field-induced anisotropy of the oscillator
/// states; a must be > 0.
double anisotropy_parameter(const OscillatorSystem& sys, const FieldConfig& fields, double a,
                            const units::PhysicalConstants& k = units::codata2018());

/// anisotropy_parameter with a = ground_state_width(sys).
double anisotropy_parameter(const OscillatorSystem& sys, const FieldConfig& fields,
                            const units::PhysicalConstants& k = units::codata2018());

DerivedQuantities derive(const OscillatorSystem& sys, const FieldConfig& fields, const Vec3& Q0,
                         const units::PhysicalConstants& k = units::codata2018());

}  // namespace model
}  // namespace casimir
