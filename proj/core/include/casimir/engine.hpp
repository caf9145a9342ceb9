#pragma once

#include <complex>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/oscillator.hpp"
#include "casimir/system.hpp"
#include "casimir/vacuum.hpp"

namespace casimir::engine {

using cplx = std::complex<double>;

/// Ingredients of the one-photon vertex operator Omega for a single mode.
struct OmegaContext {
  model::OscillatorSystem sys;
  model::FieldConfig fields;
  Vec3 Q0 = Vec3::Zero();   // kg m/s
  Vec3 k = Vec3::Zero();    // 1/m
  Vec3 eps = Vec3::UnitX();  // unit polarization, eps . k = 0

  /// Throws std::invalid_argument if |eps| != 1 or eps is not transverse.
  void validate() const;
};

/// <phi_l| Omega |phi_s>, m/s. The r0 phases are kept exactly here.
cplx omega_element(const OmegaContext& ctx, const osc::OscLevel& l, const osc::OscLevel& s,
                   const units::PhysicalConstants& kc = units::codata2018());

/// Eq. (dvp01) closed form.
Vec3 casimir_k1(const model::OscillatorSystem& sys, const model::FieldConfig& fields);

/// Eq. (cv) closed form.
Vec3 casimir_k2(const model::OscillatorSystem& sys, const model::FieldConfig& fields,
                const units::PhysicalConstants& kc = units::codata2018());

/// Bracket of Eq. (cv): -14/(15 sqrt pi) + 2/(3 sqrt pi) (dm/M)^2 + 8/(3 sqrt pi) mu/M.
double casimir_k2_bracket(const model::OscillatorSystem& sys);

/// hbar omega0 / (M c^2)
double doppler_bound(const model::OscillatorSystem& sys,
                     const units::PhysicalConstants& kc = units::codata2018());

/// Angular grid for the mode sum. Zero entries are derived from n_max.
struct KGridSpec {
  int n_theta = 0;
  int n_phi = 0;
};

struct EngineOptions {
  int n_max = 4;             // >= 4; sets the angular order when the grid is not given
  KGridSpec grid;
  double rel_tol = 1e-9;     // radial quadrature
  bool keep_doppler = false;
};

/// The eDeltaA line of the expansion split by UV behaviour.
struct LineTwo {
  Vec3 divergent = Vec3::Zero();  // same-particle terms without p0, integrated to Lambda
  Vec3 p0_term = Vec3::Zero();    // same-particle p0 terms, integrated to infinity
  Vec3 cross = Vec3::Zero();      // cross-particle terms, integrated to infinity

  Vec3 total() const { return divergent + p0_term + cross; }
};

/// Second-order eDeltaA contribution at the given fields and Q0.
LineTwo line_two(const model::OscillatorSystem& sys, const model::FieldConfig& fields,
                 const Vec3& Q0, const vacuum::Cutoff& cutoff, const EngineOptions& opts = {},
                 const units::PhysicalConstants& kc = units::codata2018());

/// Only the divergent part of line_two (the part that depends on the cutoff).
Vec3 line_two_divergent(const model::OscillatorSystem& sys, const model::FieldConfig& fields,
                        const Vec3& Q0, const vacuum::Cutoff& cutoff, const EngineOptions& opts = {},
                        const units::PhysicalConstants& kc = units::codata2018());

struct MomentumBreakdown {
  Vec3 classical = Vec3::Zero();  // Q0 = M v - alpha(0) E0 x B0
  Vec3 mass_like = Vec3::Zero();  // zero-field part (at fixed v), raw
  Vec3 mass_like_renormalized = Vec3::Zero();
  Vec3 dipole_qed = Vec3::Zero();
  Vec3 casimir_k1 = Vec3::Zero();  // closed form
  Vec3 casimir_k2 = Vec3::Zero();  // closed form
  double doppler_bound = 0.0;

  // Numeric field-linear pieces (zero when only closed forms were requested).
  Vec3 raw_field_linear = Vec3::Zero();
  Vec3 counterterm = Vec3::Zero();
  Vec3 renormalized_field_linear = Vec3::Zero();
  Vec3 p0_field_linear = Vec3::Zero();
  Vec3 cross_field_linear = Vec3::Zero();

  // Projections onto Q0-hat and (E0 x B0)-hat (zero if the direction is undefined).
  double mass_like_along_q0 = 0.0;
  double raw_along_exb = 0.0;
  double renormalized_along_exb = 0.0;

  double lambda = 0.0;
  bool numeric = false;
};

/// Closed-form breakdown; numeric members left at zero.
MomentumBreakdown closed_form_breakdown(const model::OscillatorSystem& sys,
                                        const model::FieldConfig& fields, const Vec3& Q0,
                                        const units::PhysicalConstants& kc = units::codata2018());

/// Numeric pipeline: line_two at (E0, B0, Q0) and at zero fields with the same
/// kinetic velocity, difference, counterterm subtraction and projections.
/// The closed forms are filled in alongside for comparison.
MomentumBreakdown vacuum_momentum_numeric(const model::OscillatorSystem& sys,
                                          const model::FieldConfig& fields, const Vec3& Q0,
                                          const vacuum::Cutoff& cutoff,
                                          const EngineOptions& opts = {},
                                          const units::PhysicalConstants& kc = units::codata2018());

/// The two B0 x (...) lines, evaluated to first order in the fields.
Vec3 dipole_qed_correction(const model::OscillatorSystem& sys, const model::FieldConfig& fields,
                           const Vec3& Q0, const EngineOptions& opts = {},
                           const units::PhysicalConstants& kc = units::codata2018());

/// sum_k hbar k <a^dag a> at second order.
Vec3 transverse_momentum_term(const model::OscillatorSystem& sys, const model::FieldConfig& fields,
                              const Vec3& Q0, const EngineOptions& opts = {},
                              const units::PhysicalConstants& kc = units::codata2018());

/// One discrete photon mode of a finite quantization volume.
struct DiscreteMode {
  Vec3 k = Vec3::Zero();      // 1/m
  Vec3 eps = Vec3::UnitX();   // unit polarization, eps . k = 0
  double amplitude = 0.0;     // A_k, V s / m
};

/// <phi_l| exp(i k.(r + r0) m2/M) - exp(-i k.(r + r0) m1/M) |phi_s>, the
/// relative-coordinate factor of e DeltaA for one mode.
cplx delta_phase_element(const model::OscillatorSystem& sys, const model::FieldConfig& fields,
                         const Vec3& Q0, const Vec3& k, const osc::OscLevel& l,
                         const osc::OscLevel& s,
                         const units::PhysicalConstants& kc = units::codata2018());

/// Eq. (Kperturb) for a discrete mode set with explicit level sums over
/// osc::levels_per_axis(osc_nmax). Denominators keep the exact recoil energy
/// |Q0 - hbar k|^2 / 2M. The photon emission element is (Omega^dag)_{l,0}.
struct DiscreteKperturb {
  Vec3 q0 = Vec3::Zero();
  Vec3 delta_a = Vec3::Zero();      // second line
  Vec3 dipole_first = Vec3::Zero();   // third line (r fluctuation only)
  Vec3 dipole_second = Vec3::Zero();  // fourth line (r fluctuation only)

  Vec3 correction() const { return delta_a + dipole_first + dipole_second; }
  Vec3 total() const { return q0 + correction(); }
};

DiscreteKperturb kperturb_discrete(const model::OscillatorSystem& sys,
                                   const model::FieldConfig& fields, const Vec3& Q0,
                                   const std::vector<DiscreteMode>& modes, int osc_nmax,
                                   const units::PhysicalConstants& kc = units::codata2018());

/// Continuum limit of the mode sum: sum_k e^2 A_k^2 -> alpha hbar^2 / (4 pi^2) int k dk dOmega.
double mode_sum_prefactor(const units::PhysicalConstants& kc = units::codata2018());

}  // namespace casimir::engine
