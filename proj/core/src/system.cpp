#include "casimir/system.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace casimir::model {

namespace {

double checked(double v, const char* name) {
  if (!(std::isfinite(v) && v > 0.0)) {
    throw std::invalid_argument(std::string("oscillator parameter '") + name +
                                "' must be finite and > 0");
  }
  return v;
}

}  // namespace

OscillatorSystem::OscillatorSystem(double m1, double m2, double e_charge, double omega0)
    : m1_(checked(m1, "m1")),
      m2_(checked(m2, "m2")),
      e_(checked(e_charge, "e_charge")),
      omega0_(checked(omega0, "omega0")) {}

OscillatorSystem hydrogen_like(double hbar_omega0_eV, const units::PhysicalConstants& k) {
  return {k.m_proton, k.m_electron, k.e_charge, hbar_omega0_eV * k.eV / k.hbar};
}

double static_polarizability(const OscillatorSystem& sys) {
  const double w = sys.omega0();
  return sys.charge() * sys.charge() / (sys.reduced_mass() * w * w);
}

double ground_state_width(const OscillatorSystem& sys, const units::PhysicalConstants& k) {
  return std::sqrt(k.hbar / (sys.reduced_mass() * sys.omega0()));
}

Vec3 classical_pseudo_momentum(const OscillatorSystem& sys, const FieldConfig& fields,
                               const Vec3& v) {
  return sys.total_mass() * v - static_polarizability(sys) * fields.cross();
}

Vec3 velocity_from_pseudo_momentum(const OscillatorSystem& sys, const FieldConfig& fields,
                                   const Vec3& Q0) {
  return (Q0 + static_polarizability(sys) * fields.cross()) / sys.total_mass();
}

Vec3 displacement_r0(const OscillatorSystem& sys, const FieldConfig& fields, const Vec3& Q0) {
  const double a0 = static_polarizability(sys);
  return a0 / sys.charge() * (fields.E0 + Q0.cross(fields.B0) / sys.total_mass());
}

Vec3 momentum_shift_p0(const OscillatorSystem& sys, const FieldConfig& fields) {
  const double pref = (sys.m2() - sys.m1()) / (2.0 * sys.total_mass());
  return pref * static_polarizability(sys) * fields.cross();
}

double anisotropy_parameter(const OscillatorSystem& sys, const FieldConfig& fields, double a,
                            const units::PhysicalConstants& k) {
  if (!(a > 0.0)) throw std::invalid_argument("characteristic size a must be > 0");
  return sys.charge() * fields.B0.norm() * a * a / k.hbar;
}

double anisotropy_parameter(const OscillatorSystem& sys, const FieldConfig& fields,
                            const units::PhysicalConstants& k) {
  return anisotropy_parameter(sys, fields, ground_state_width(sys, k), k);
}

DerivedQuantities derive(const OscillatorSystem& sys, const FieldConfig& fields, const Vec3& Q0,
                         const units::PhysicalConstants& k) {
  DerivedQuantities d;
  d.M = sys.total_mass();
  d.mu = sys.reduced_mass();
  d.alpha0 = static_polarizability(sys);
  d.sigma = ground_state_width(sys, k);
  d.r0 = displacement_r0(sys, fields, Q0);
  d.p0 = momentum_shift_p0(sys, fields);
  d.Q0 = Q0;
  return d;
}

}  // namespace casimir::model
