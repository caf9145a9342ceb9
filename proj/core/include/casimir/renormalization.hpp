#pragma once

#include <vector>

#include "casimir/constants.hpp"
#include "casimir/engine.hpp"
#include "casimir/system.hpp"
#include "casimir/vacuum.hpp"

namespace casimir::renorm {

/// Mass counterterms and the E0 x B0 momentum at one cutoff. Shifts are
/// additive: observed = bare + delta.
struct RenormalizationReport {
  double delta_m1 = 0.0;      // kg
  double delta_m2 = 0.0;      // kg
  double delta_M = 0.0;       // kg
  double delta_inv_mu = 0.0;  // 1/kg
  double mu_star = 0.0;       // kg
  double lambda = 0.0;        // 1/m
  double residual_slope = 0.0;

  // Projections onto (E0 x B0)-hat, kg m/s.
  double raw = 0.0;
  double counterterm = 0.0;
  double renormalized = 0.0;
};

/// delta(1/mu) = -(1/mu) (dm1/m1 + dm2/m2 - dM/M), dM = dm1 + dm2.
double counterterm_assembly(double delta_m1, double delta_m2, const model::OscillatorSystem& sys);

/// The momentum the counterterm absorbs: -delta(1/mu) e^2/omega0^2 E0 x B0.
Vec3 counterterm_momentum(const model::OscillatorSystem& sys, const model::FieldConfig& fields,
                          double delta_m1, double delta_m2);

/// Observed reduced mass, 1/mu* = 1/mu + delta(1/mu) with delta_m from the cutoff.
double observed_reduced_mass(const model::OscillatorSystem& sys, const vacuum::Cutoff& cutoff,
                             const units::PhysicalConstants& kc = units::codata2018());

/// e^2 / (mu* omega0^2). Tends to the bare alpha(0) as Lambda -> 0.
double renormalized_polarizability(const model::OscillatorSystem& sys, const vacuum::Cutoff& cutoff,
                                   const units::PhysicalConstants& kc = units::codata2018());

/// Counterterms and masses at one cutoff (momentum members left at zero).
RenormalizationReport mass_report(const model::OscillatorSystem& sys, const vacuum::Cutoff& cutoff,
                                  const units::PhysicalConstants& kc = units::codata2018());

struct ScanResult {
  std::vector<RenormalizationReport> points;
  double residual_slope = 0.0;  // fitted d ln|K_ren| / d ln Lambda
  double raw_slope = 0.0;       // fitted d K_raw / d ln Lambda, kg m/s
  double expected_raw_slope = 0.0;  // same fit applied to the closed-form counterterms
  double closed_form_k1 = 0.0;  // Eq. (dvp01) along (E0 x B0)-hat
};

/// Raw, counterterm and renormalized E0 x B0 momentum per cutoff. The
/// cutoff-independent (convergent) parts are evaluated once. Needs at least
/// three cutoffs spanning two decades.
ScanResult cutoff_independence_scan(const model::OscillatorSystem& sys,
                                    const model::FieldConfig& fields, const Vec3& Q0,
                                    const std::vector<double>& lambdas,
                                    const engine::EngineOptions& opts = {},
                                    const units::PhysicalConstants& kc = units::codata2018());

/// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace casimir::renorm
