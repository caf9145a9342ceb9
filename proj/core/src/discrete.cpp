#include <cmath>
#include <stdexcept>

#include "casimir/engine.hpp"

namespace casimir::engine {

namespace {

using osc::OscLevel;

// <l| r |s> as a vector.
Vec3 position_vector(const osc::OscParams& p, const OscLevel& l, const OscLevel& s) {
  return {osc::position_element(p, l, s, 0), osc::position_element(p, l, s, 1),
          osc::position_element(p, l, s, 2)};
}

}  // namespace

cplx delta_phase_element(const model::OscillatorSystem& sys, const model::FieldConfig& fields,
                         const Vec3& Q0, const Vec3& k, const osc::OscLevel& l,
                         const osc::OscLevel& s, const units::PhysicalConstants& kc) {
  const auto p = osc::OscParams::from_system(sys, kc);
  const Vec3 r0 = model::displacement_r0(sys, fields, Q0);
  const double M = sys.total_mass();
  const Vec3 q1 = (sys.m2() / M) * k;
  const Vec3 q2 = -(sys.m1() / M) * k;
  return std::exp(cplx(0.0, q1.dot(r0))) * osc::plane_wave_element(p, q1, l, s) -
         std::exp(cplx(0.0, q2.dot(r0))) * osc::plane_wave_element(p, q2, l, s);
}

DiscreteKperturb kperturb_discrete(const model::OscillatorSystem& sys,
                                   const model::FieldConfig& fields, const Vec3& Q0,
                                   const std::vector<DiscreteMode>& modes, int osc_nmax,
                                   const units::PhysicalConstants& kc) {
  if (osc_nmax < 0) throw std::invalid_argument("kperturb_discrete: osc_nmax must be >= 0");
  const auto levels = osc::levels_per_axis(osc_nmax);
  const auto p = osc::OscParams::from_system(sys, kc);
  const std::size_t n = levels.size();
  const double e = sys.charge();
  const double hw = kc.hbar * sys.omega0();
  const double M = sys.total_mass();
  const OscLevel ground;

  DiscreteKperturb out;
  out.q0 = Q0;
  Vec3 first = Vec3::Zero();
  Vec3 second = Vec3::Zero();
  for (const auto& mode : modes) {
    OmegaContext ctx{sys, fields, Q0, mode.k, mode.eps};
    ctx.validate();
    const double a2 = mode.amplitude * mode.amplitude;
    const Vec3 recoil = Q0 - kc.hbar * mode.k;
    const double shift = (recoil.squaredNorm() - Q0.squaredNorm()) / (2.0 * M) +
                         kc.hbar * kc.c * mode.k.norm();
    // E_0 - E_{l, Q0 - hbar k, 1_k}
    std::vector<double> gap1(n);
    std::vector<cplx> emit(n);  // (Omega^dag)_{l,0}
    for (std::size_t i = 0; i < n; ++i) {
      gap1[i] = -(hw * levels[i].total() + shift);
      emit[i] = std::conj(omega_element(ctx, ground, levels[i], kc));
    }

    cplx line2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      line2 += delta_phase_element(sys, fields, Q0, mode.k, ground, levels[i], kc) * emit[i] /
               gap1[i];
    }
    out.delta_a += 2.0 * e * e * a2 * line2.real() * mode.eps;

    // Third line: <0|r|l> is nonzero only for N_l = 1.
    Eigen::Vector3cd l3 = Eigen::Vector3cd::Zero();
    for (std::size_t i = 0; i < n; ++i) {
      if (levels[i].total() != 1) continue;
      const Vec3 r = position_vector(p, ground, levels[i]);
      cplx inner = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        inner += omega_element(ctx, levels[i], levels[j], kc) * emit[j] / gap1[j];
      }
      l3 += r.cast<cplx>() * (inner / (-hw * levels[i].total()));
    }
    first += 2.0 * e * e * e * a2 * l3.real();

    // Fourth line: sum_{l,s} <s|r|l> (Omega^dag)_{l,0} Omega_{0,s}.
    Eigen::Vector3cd l4 = Eigen::Vector3cd::Zero();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (std::abs(levels[i].total() - levels[j].total()) != 1) continue;
        const Vec3 r = position_vector(p, levels[j], levels[i]);
        if (r.isZero(0.0)) continue;
        l4 += r.cast<cplx>() * (emit[i] * std::conj(emit[j]) / (gap1[i] * gap1[j]));
      }
    }
    second += e * e * e * a2 * l4.real();
  }
  out.dipole_first = fields.B0.cross(first);
  out.dipole_second = fields.B0.cross(second);
  return out;
}

}  // namespace casimir::engine
