#include "casimir/renormalization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace casimir::renorm {

double counterterm_assembly(double delta_m1, double delta_m2, const model::OscillatorSystem& sys) {
  const double dM = delta_m1 + delta_m2;
  return -(delta_m1 / sys.m1() + delta_m2 / sys.m2() - dM / sys.total_mass()) / sys.reduced_mass();
}

Vec3 counterterm_momentum(const model::OscillatorSystem& sys, const model::FieldConfig& fields,
                          double delta_m1, double delta_m2) {
  const double e = sys.charge();
  const double w = sys.omega0();
  return -counterterm_assembly(delta_m1, delta_m2, sys) * (e * e / (w * w)) * fields.cross();
}

RenormalizationReport mass_report(const model::OscillatorSystem& sys, const vacuum::Cutoff& cutoff,
                                  const units::PhysicalConstants& kc) {
  RenormalizationReport r;
  const double alpha = units::fine_structure(kc);
  r.lambda = cutoff.lambda();
  r.delta_m1 = vacuum::delta_mass(sys.m1(), cutoff, alpha, kc);
  r.delta_m2 = vacuum::delta_mass(sys.m2(), cutoff, alpha, kc);
  r.delta_M = r.delta_m1 + r.delta_m2;
  r.delta_inv_mu = counterterm_assembly(r.delta_m1, r.delta_m2, sys);
  r.mu_star = 1.0 / (1.0 / sys.reduced_mass() + r.delta_inv_mu);
  return r;
}

double observed_reduced_mass(const model::OscillatorSystem& sys, const vacuum::Cutoff& cutoff,
                             const units::PhysicalConstants& kc) {
  return mass_report(sys, cutoff, kc).mu_star;
}

double renormalized_polarizability(const model::OscillatorSystem& sys, const vacuum::Cutoff& cutoff,
                                   const units::PhysicalConstants& kc) {
  const double e = sys.charge();
  const double w = sys.omega0();
  return e * e / (observed_reduced_mass(sys, cutoff, kc) * w * w);
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_slope: need >= 2 points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_slope: degenerate abscissae");
  return sxy / sxx;
}

ScanResult cutoff_independence_scan(const model::OscillatorSystem& sys,
                                    const model::FieldConfig& fields, const Vec3& Q0,
                                    const std::vector<double>& lambdas,
                                    const engine::EngineOptions& opts,
                                    const units::PhysicalConstants& kc) {
  if (lambdas.size() < 3) throw std::invalid_argument("cutoff_independence_scan: need >= 3 cutoffs");
  const auto [lo, hi] = std::minmax_element(lambdas.begin(), lambdas.end());
  if (!(*lo > 0.0) || !std::isfinite(*hi) || *hi / *lo < 100.0 * (1.0 - 1e-12)) {
    throw std::invalid_argument("cutoff_independence_scan: cutoffs must span >= 2 decades");
  }
  const Vec3 exb = fields.cross();
  if (exb.norm() == 0.0) throw std::invalid_argument("cutoff_independence_scan: E0 x B0 vanishes");
  const Vec3 n = exb.normalized();

  // Convergent parts once; divergent parts per cutoff.
  const Vec3 v = model::velocity_from_pseudo_momentum(sys, fields, Q0);
  const Vec3 Q0_free = sys.total_mass() * v;
  const vacuum::Cutoff first(lambdas.front());
  const auto on = engine::line_two(sys, fields, Q0, first, opts, kc);
  const auto off = engine::line_two(sys, model::FieldConfig{}, Q0_free, first, opts, kc);
  const Vec3 convergent = (on.p0_term + on.cross) - (off.p0_term + off.cross);

  ScanResult out;
  out.closed_form_k1 = engine::casimir_k1(sys, fields).dot(n);
  std::vector<double> logl;
  std::vector<double> raw;
  std::vector<double> ct;
  std::vector<double> logren;
  for (double L : lambdas) {
    const vacuum::Cutoff cut(L);
    RenormalizationReport r = mass_report(sys, cut, kc);
    Vec3 divergent = on.divergent - off.divergent;
    if (L != lambdas.front()) {
      divergent = engine::line_two_divergent(sys, fields, Q0, cut, opts, kc) -
                  engine::line_two_divergent(sys, model::FieldConfig{}, Q0_free, cut, opts, kc);
    }
    r.raw = (convergent + divergent).dot(n);
    r.counterterm = counterterm_momentum(sys, fields, r.delta_m1, r.delta_m2).dot(n);
    r.renormalized = r.raw - r.counterterm;
    out.points.push_back(r);
    logl.push_back(std::log(L));
    raw.push_back(r.raw);
    ct.push_back(r.counterterm);
    logren.push_back(std::log(std::abs(r.renormalized)));
  }
  out.raw_slope = fit_slope(logl, raw);
  out.expected_raw_slope = fit_slope(logl, ct);
  out.residual_slope = fit_slope(logl, logren);
  for (auto& p : out.points) p.residual_slope = out.residual_slope;
  return out;
}

}  // namespace casimir::renorm
