#include "casimir/engine.hpp"
#include "casimir/resolvent.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <type_traits>

#include "casimir/coherent.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/renormalization.hpp"

namespace casimir::engine {

namespace {

using coherent::CVec3;
using coherent::Ket;

constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 0.70710678118654752440;

// Everything a mode-sum evaluation needs, with fields already folded into
// r0, p0 and Q0.
struct Setup {
  std::array<double, 2> m{};
  double M = 0.0;
  double mu = 0.0;
  double e = 0.0;
  double hw = 0.0;  // hbar omega0
  double hbar = 0.0;
  double c = 0.0;
  double sigma = 0.0;
  Vec3 B0 = Vec3::Zero();
  Vec3 r0 = Vec3::Zero();
  Vec3 p0 = Vec3::Zero();
  Vec3 Q0 = Vec3::Zero();
  bool doppler = false;
};

Setup make_setup(const model::OscillatorSystem& sys, const model::FieldConfig& fields,
                 const Vec3& Q0, bool zeroth_order_b, bool doppler,
                 const units::PhysicalConstants& kc) {
  Setup s;
  s.m = {sys.m1(), sys.m2()};
  s.M = sys.total_mass();
  s.mu = sys.reduced_mass();
  s.e = sys.charge();
  s.hbar = kc.hbar;
  s.c = kc.c;
  s.hw = kc.hbar * sys.omega0();
  const auto d = model::derive(sys, fields, Q0, kc);
  s.sigma = d.sigma;
  s.B0 = fields.B0;
  s.r0 = d.r0;
  s.p0 = d.p0;
  s.Q0 = Q0;
  if (zeroth_order_b) {
    s.B0.setZero();
    s.p0.setZero();
    s.r0 = d.alpha0 * fields.E0 / s.e;
  }
  s.doppler = doppler;
  return s;
}

// One particle's share e_a F_a of Omega: phase exp(i q.(r + r0)) with
// F = f + c.a + d.a^dag.
struct Vertex {
  double sign = 1.0;  // +1 for particle 1, -1 for particle 2
  Vec3 q = Vec3::Zero();
  CVec3 w = CVec3::Zero();
  double f = 0.0;
  double f_p0 = 0.0;  // p0 share of f
  CVec3 c = CVec3::Zero();
  CVec3 d = CVec3::Zero();
};

std::array<Vertex, 2> vertices(const Setup& s, const Vec3& k, const Vec3& eps) {
  const Vec3 u = eps.cross(s.B0);  // eps.(B0 x r) = u.r
  const double mag_r0 = s.e * eps.dot(s.B0.cross(s.r0));
  const double recoil = s.Q0.dot(eps) / s.M;
  const double p0e = s.p0.dot(eps);
  const double xs = s.sigma * kInvSqrt2;           // r = xs (a + a^dag)
  const double ps = s.hbar / s.sigma * kInvSqrt2;  // p = i ps (a^dag - a)
  std::array<Vertex, 2> out;
  for (std::size_t a = 0; a < 2; ++a) {
    Vertex& v = out[a];
    v.sign = a == 0 ? 1.0 : -1.0;
    const double inv_m = 1.0 / s.m[a];
    v.q = v.sign * (s.m[1 - a] / s.M) * k;
    v.w = coherent::displacement_for(v.q, s.sigma);
    v.f_p0 = p0e * inv_m;
    v.f = v.sign * mag_r0 * inv_m - v.sign * recoil + v.f_p0;
    const CVec3 mag = (v.sign * s.e * inv_m * xs) * u.cast<cplx>();
    const CVec3 mom = cplx(0.0, ps * inv_m) * eps.cast<cplx>();
    v.c = mag + mom;
    v.d = mag - mom;
  }
  return out;
}

// Photon plus recoil energy of the one-photon intermediate state.
double photon_energy(const Setup& s, const Vec3& k) {
  const double kn = k.norm();
  double D = s.hbar * s.c * kn + s.hbar * s.hbar * kn * kn / (2.0 * s.M);
  if (s.doppler) D -= s.hbar * k.dot(s.Q0) / s.M;
  return D;
}

// Same-particle denominator after exp(i q r) H(p) exp(-i q r) = H(p - hbar q),
// with the p.q Doppler term dropped.
double shifted_energy(const Setup& s, double D, const Vertex& v) {
  return D + s.hbar * s.hbar * v.q.squaredNorm() / (2.0 * s.mu);
}

// First-order expansion of exp(i (q_a - q_b).r0).
cplx cross_phase(const Setup& s, const Vertex& va, const Vertex& vb) {
  return {1.0, (va.q - vb.q).dot(s.r0)};
}

// (hbar omega0)^-n int_0^inf dtau tau^(n-1) e^(-p tau) g(tau), p = D / hbar omega0,
// the Laplace form of <...G^n...> with G = (D + hbar omega0 N)^-1, n = 1, 2.
// Every chain has g = e^(X y) poly(y), y = e^-tau, X = conj(w_a).w_b.
template <class G>
auto resolvent(G g, const Setup& s, double D, int power, double X) {
  const double scale = power == 1 ? 1.0 / s.hw : 1.0 / (s.hw * s.hw);
  auto out = laplace_chain(g, D / s.hw, X, power);
  out *= scale;
  return out;
}

// X = conj(w_a).w_b of the two displacements; real because both are imaginary.
double overlap_exponent(const CVec3& wa, const CVec3& wb) { return wa.dot(wb).real(); }

Ket apply(Ket k, double f, const CVec3& c, const CVec3& d) {
  k.linear(f, c, d);
  return k;
}

quad::SphereRule make_rule(const EngineOptions& opts) {
  if (opts.n_max < 4) throw std::invalid_argument("engine: n_max must be >= 4");
  const int nt = opts.grid.n_theta > 0 ? opts.grid.n_theta : opts.n_max + 4;
  const int np = opts.grid.n_phi > 0 ? opts.grid.n_phi : 2 * nt;
  return quad::sphere_rule(nt, np);
}

// int_k_ir^k_hi k f(k) dk with f already integrated over directions: a linear
// panel below k_lo and a logarithmic variable above. abs_tol is split between
// the panels.
template <class F>
auto radial(F f, double k_ir, double k_lo, double k_hi, double tol, double abs_tol = 0.0) {
  using R = std::decay_t<decltype(f(k_lo))>;
  quad::QuadOptions o;
  o.rel_tol = tol;
  o.abs_tol = 0.5 * abs_tol;
  const double split = std::min(k_lo, k_hi);
  R out = R(f(k_lo) * 0.0);
  if (split > k_ir) {
    out = quad::integrate([&](double k) -> R { return R(k * f(k)); }, k_ir, split, o).value;
  }
  if (k_hi > k_lo) {
    out += quad::integrate(
               [&](double x) -> R {
                 const double k = std::exp(x);
                 return R(k * k * f(k));
               },
               std::log(k_lo), std::log(k_hi), o)
               .value;
  }
  return out;
}

// The angular sums cancel between terms much larger than the result, which
// leaves rounding noise of about 1e-16 of the summed magnitudes. The floor is
// that magnitude integrated on a fixed log grid (a rough estimate suffices),
// times `relative`. Cross terms also cancel inside each chain and need ~1e-10.
template <class F>
double noise_floor(F magnitude, double k_lo, double k_hi, double relative = 1e-13,
                   double per_decade = 6.0) {
  if (!(k_hi > k_lo)) return 0.0;
  const double span = std::log(k_hi / k_lo);
  const int n = 2 + static_cast<int>(per_decade * span / std::log(10.0));
  const double h = span / n;
  double sum = 0.5 * k_lo * k_lo * magnitude(k_lo);
  for (int i = 0; i <= n; ++i) {
    const double k = k_lo * std::exp(i * h);
    sum += (i == 0 || i == n ? 0.5 : 1.0) * h * k * k * magnitude(k);
  }
  return relative * sum;
}

double ir_scale(const Setup& s) { return 1e-3 * std::min(s.hw / (s.hbar * s.c), 1.0 / s.sigma); }

// Upper limit for the UV-convergent same-particle terms. Their integrand falls
// like b/k^2 (b = 2 m c / hbar) while each piece falls like 1/k, so far above b
// the difference drowns in roundoff; the neglected tail is ~1e-8 b_max / b.
double uv_scale(const Setup& s) {
  return 1e8 * 2.0 * std::max(s.m[0], s.m[1]) * s.c / s.hbar;
}

// Cross-particle terms carry exp(-(q1^2 + q2^2) sigma^2 / 4) <= exp(-k^2 sigma^2 / 8).
double cross_scale(const Setup& s) { return 40.0 / s.sigma; }

enum class Part { divergent, p0, cross };

// Angular integral of sum_eps eps Re T for one part of the eDeltaA line.
Vec3 line_two_angular(const Setup& s, const quad::SphereRule& rule, double kn, Part part,
                      double* magnitude = nullptr) {
  Vec3 acc = Vec3::Zero();
  double mag = 0.0;
  for (std::size_t i = 0; i < rule.directions.size(); ++i) {
    const Vec3& dir = rule.directions[i];
    const Vec3 k = kn * dir;
    const double D = photon_energy(s, k);
    for (const Vec3& eps : vacuum::polarization_basis(dir)) {
      const auto v = vertices(s, k, eps);
      cplx T = 0.0;
      for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
          const Vertex& va = v[a];
          const Vertex& vb = v[b];
          if (a == b && part == Part::cross) continue;
          if (a != b && part != Part::cross) continue;
          if (a == b && !s.doppler) {
            const double f = part == Part::p0 ? vb.f_p0 : vb.f - vb.f_p0;
            const double term = f / shifted_energy(s, D, vb);
            T += va.sign * term;
            mag += rule.weights[i] * std::abs(term);
            continue;
          }
          // <0| e_a G F_b e_b^dag |0> through the exact resolvent.
          double f = vb.f;
          CVec3 c = vb.c;
          CVec3 d = vb.d;
          if (a == b) {
            f = part == Part::p0 ? vb.f_p0 : vb.f - vb.f_p0;
            if (part == Part::p0) c = d = CVec3::Zero();
          }
          Ket right;
          right.displace(-vb.w).linear(f, c, d);
          auto chain = [&](double tau) {
            Ket k2 = right;
            k2.decay(tau).displace(va.w);
            return k2.vacuum_overlap();
          };
          const cplx phase = a == b ? cplx(1.0) : cross_phase(s, va, vb);
          const double X = overlap_exponent(va.w, vb.w);
          const cplx term = phase * resolvent(chain, s, D, 1, X);
          T += va.sign * term;
          mag += rule.weights[i] * std::abs(term);
        }
      }
      acc += rule.weights[i] * T.real() * eps;
    }
  }
  if (magnitude) *magnitude = mag;
  return acc;
}

}  // namespace

void OmegaContext::validate() const {
  if (std::abs(eps.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("OmegaContext: polarization must be a unit vector");
  }
  const double kn = k.norm();
  if (kn > 0.0 && std::abs(eps.dot(k)) > 1e-12 * kn) {
    throw std::invalid_argument("OmegaContext: polarization must be transverse to k");
  }
  if (!k.allFinite() || !Q0.allFinite() || !fields.finite()) {
    throw std::invalid_argument("OmegaContext: non-finite input");
  }
}

cplx omega_element(const OmegaContext& ctx, const osc::OscLevel& l, const osc::OscLevel& s,
                   const units::PhysicalConstants& kc) {
  ctx.validate();
  const Setup st = make_setup(ctx.sys, ctx.fields, ctx.Q0, false, false, kc);
  const auto params = osc::OscParams::from_system(ctx.sys, kc);
  const auto v = vertices(st, ctx.k, ctx.eps);
  const Vec3 u = ctx.eps.cross(st.B0);
  cplx total = 0.0;
  for (const auto& vx : v) {
    const double inv_m = 1.0 / st.m[vx.sign > 0 ? 0 : 1];
    const cplx phase = std::exp(cplx(0.0, vx.q.dot(st.r0)));
    const Eigen::Vector3cd c_r = (vx.sign * st.e * inv_m) * u.cast<cplx>();
    const Eigen::Vector3cd d_p = (-inv_m) * ctx.eps.cast<cplx>();
    total += phase * (vx.f * osc::plane_wave_element(params, vx.q, l, s) +
                      osc::linear_plane_wave_element(params, c_r, d_p, vx.q, l, s));
  }
  return total;
}

Vec3 casimir_k1(const model::OscillatorSystem& sys, const model::FieldConfig& fields) {
  const double alpha = units::fine_structure(units::codata2018());
  const double m1 = sys.m1();
  const double m2 = sys.m2();
  if (m1 == m2) return Vec3::Zero();
  const double factor = (4.0 * alpha / (3.0 * kPi)) * ((m1 - m2) / sys.total_mass()) *
                        std::log(m1 / m2);
  return -model::static_polarizability(sys) * factor * fields.cross();
}

double casimir_k2_bracket(const model::OscillatorSystem& sys) {
  const double sp = std::sqrt(kPi);
  const double M = sys.total_mass();
  const double dm = (sys.m1() - sys.m2()) / M;
  return -14.0 / (15.0 * sp) + 2.0 / (3.0 * sp) * dm * dm + 8.0 / (3.0 * sp) * sys.reduced_mass() / M;
}

Vec3 casimir_k2(const model::OscillatorSystem& sys, const model::FieldConfig& fields,
                const units::PhysicalConstants& kc) {
  const double alpha = units::fine_structure(kc);
  const double ratio = kc.hbar * sys.omega0() / (sys.reduced_mass() * kc.c * kc.c);
  return model::static_polarizability(sys) * alpha * std::sqrt(ratio) * casimir_k2_bracket(sys) *
         fields.cross();
}

double doppler_bound(const model::OscillatorSystem& sys, const units::PhysicalConstants& kc) {
  return kc.hbar * sys.omega0() / (sys.total_mass() * kc.c * kc.c);
}

double mode_sum_prefactor(const units::PhysicalConstants& kc) {
  return units::fine_structure(kc) * kc.hbar * kc.hbar / (4.0 * kPi * kPi);
}

namespace {

LineTwo line_two_parts(const model::OscillatorSystem& sys, const model::FieldConfig& fields,
                       const Vec3& Q0, const vacuum::Cutoff& cutoff, const EngineOptions& opts,
                       const units::PhysicalConstants& kc, bool convergent) {
  if (cutoff.infinite()) {
    throw std::invalid_argument("line_two: the divergent part needs a finite cutoff");
  }
  const Setup s = make_setup(sys, fields, Q0, false, opts.keep_doppler, kc);
  const auto rule = make_rule(opts);
  const double pref = -2.0 * mode_sum_prefactor(kc);
  auto part = [&](Part p) {
    return [&, p](double kn) { return Vec3(pref * line_two_angular(s, rule, kn, p)); };
  };
  auto magnitude = [&](Part p) {
    return [&, p](double kn) {
      double m = 0.0;
      line_two_angular(s, rule, kn, p, &m);
      return std::abs(pref) * m;
    };
  };
  const double k_ir = cutoff.ir_epsilon();
  const double k_lo = std::max(ir_scale(s), k_ir);
  auto integrate_part = [&](Part p, double k_hi) {
    const double floor = noise_floor(magnitude(p), k_lo, k_hi, p == Part::cross ? 1e-10 : 1e-13);
    return radial(part(p), k_ir, k_lo, k_hi, opts.rel_tol, floor);
  };
  LineTwo out;
  out.divergent = integrate_part(Part::divergent, cutoff.lambda());
  if (convergent) {
    out.p0_term = integrate_part(Part::p0, uv_scale(s));
    out.cross = integrate_part(Part::cross, cross_scale(s));
  }
  return out;
}

}  // namespace

LineTwo line_two(const model::OscillatorSystem& sys, const model::FieldConfig& fields,
                 const Vec3& Q0, const vacuum::Cutoff& cutoff, const EngineOptions& opts,
                 const units::PhysicalConstants& kc) {
  return line_two_parts(sys, fields, Q0, cutoff, opts, kc, true);
}

Vec3 line_two_divergent(const model::OscillatorSystem& sys, const model::FieldConfig& fields,
                        const Vec3& Q0, const vacuum::Cutoff& cutoff, const EngineOptions& opts,
                        const units::PhysicalConstants& kc) {
  return line_two_parts(sys, fields, Q0, cutoff, opts, kc, false).divergent;
}

MomentumBreakdown closed_form_breakdown(const model::OscillatorSystem& sys,
                                        const model::FieldConfig& fields, const Vec3& Q0,
                                        const units::PhysicalConstants& kc) {
  MomentumBreakdown b;
  b.classical = Q0;
  b.casimir_k1 = casimir_k1(sys, fields);
  b.casimir_k2 = casimir_k2(sys, fields, kc);
  b.doppler_bound = doppler_bound(sys, kc);
  return b;
}

MomentumBreakdown vacuum_momentum_numeric(const model::OscillatorSystem& sys,
                                          const model::FieldConfig& fields, const Vec3& Q0,
                                          const vacuum::Cutoff& cutoff, const EngineOptions& opts,
                                          const units::PhysicalConstants& kc) {
  MomentumBreakdown b = closed_form_breakdown(sys, fields, Q0, kc);
  b.numeric = true;
  b.lambda = cutoff.lambda();

  // Switch the fields off at fixed kinetic velocity.
  const Vec3 v = model::velocity_from_pseudo_momentum(sys, fields, Q0);
  const Vec3 Q0_free = sys.total_mass() * v;
  const LineTwo on = line_two(sys, fields, Q0, cutoff, opts, kc);
  const LineTwo off = line_two(sys, model::FieldConfig{}, Q0_free, cutoff, opts, kc);

  const double alpha = units::fine_structure(kc);
  const double dm1 = vacuum::delta_mass(sys.m1(), cutoff, alpha, kc);
  const double dm2 = vacuum::delta_mass(sys.m2(), cutoff, alpha, kc);

  b.mass_like = off.total();
  b.mass_like_renormalized = off.total() - v * (dm1 + dm2);
  b.raw_field_linear = on.total() - off.total();
  b.p0_field_linear = on.p0_term - off.p0_term;
  b.cross_field_linear = on.cross - off.cross;
  b.counterterm = renorm::counterterm_momentum(sys, fields, dm1, dm2);
  b.renormalized_field_linear = b.raw_field_linear - b.counterterm;

  const Vec3 exb = fields.cross();
  if (exb.norm() > 0.0) {
    const Vec3 n = exb.normalized();
    b.raw_along_exb = b.raw_field_linear.dot(n);
    b.renormalized_along_exb = b.renormalized_field_linear.dot(n);
  }
  if (Q0_free.norm() > 0.0) b.mass_like_along_q0 = b.mass_like.dot(Q0_free.normalized());
  b.dipole_qed = dipole_qed_correction(sys, fields, Q0, opts, kc);
  return b;
}

Vec3 dipole_qed_correction(const model::OscillatorSystem& sys, const model::FieldConfig& fields,
                           const Vec3& Q0, const EngineOptions& opts,
                           const units::PhysicalConstants& kc) {
  if (fields.B0.isZero(0.0)) return Vec3::Zero();
  // Omega is taken at zeroth order in B0; the explicit B0 x supplies the first.
  const Setup s = make_setup(sys, fields, Q0, true, false, kc);
  const auto rule = make_rule(opts);
  const double pref = mode_sum_prefactor(kc);
  const double xs = s.sigma * kInvSqrt2;

  // Returns (line-3 sum, line-4 sum) packed as a 6-vector of real parts.
  auto angular = [&](double kn, double* magnitude) -> Eigen::Matrix<double, 6, 1> {
    Eigen::Matrix<double, 6, 1> acc = Eigen::Matrix<double, 6, 1>::Zero();
    double mag = 0.0;
    for (std::size_t i = 0; i < rule.directions.size(); ++i) {
      const Vec3& dir = rule.directions[i];
      const Vec3 k = kn * dir;
      const double D0 = photon_energy(s, k);
      for (const Vec3& eps : vacuum::polarization_basis(dir)) {
        const auto v = vertices(s, k, eps);
        CVec3 l3 = CVec3::Zero();
        CVec3 l4 = CVec3::Zero();
        for (std::size_t a = 0; a < 2; ++a) {
          for (std::size_t b = 0; b < 2; ++b) {
            const Vertex& va = v[a];
            const Vertex& vb = v[b];
            const bool same = a == b;
            // Same-particle terms: the phases commute through and only shift
            // the recoil energy (Doppler term dropped).
            const double D = same ? shifted_energy(s, D0, vb) : D0;
            const CVec3 wa = same ? CVec3::Zero() : va.w;
            const CVec3 wb = same ? CVec3::Zero() : vb.w;
            const cplx phase = same ? cplx(1.0) : cross_phase(s, va, vb);
            Ket right;
            right.displace(-wb).linear(vb.f, vb.c, vb.d);

            // <0| r e_a F_a G F_b e_b^dag |0>
            auto g3 = [&](double tau) -> CVec3 {
              Ket k2 = right;
              k2.decay(tau).linear(va.f, va.c, va.d).displace(wa);
              return xs * k2.lowered_overlap();
            };
            const double X = overlap_exponent(wa, wb);
            const CVec3 t3 = phase * resolvent(g3, s, D, 1, X);
            l3 += t3;
            mag += rule.weights[i] * (2.0 * s.e / s.hw) * t3.norm();

            // <0| e_a F_a G r G F_b e_b^dag |0>, with
            // G r G = int dT e^{-T D/hw} xs (1 - e^-T) [e^{-TN} a + a^dag e^{-TN}] / hw^2.
            auto g4 = [&](double T) -> CVec3 {
              CVec3 out;
              const double damp = -std::expm1(-T);
              for (int j = 0; j < 3; ++j) {
                CVec3 unit = CVec3::Zero();
                unit[j] = 1.0;
                Ket lower = apply(right, 0.0, unit, CVec3::Zero());
                lower.decay(T).linear(va.f, va.c, va.d).displace(wa);
                Ket raise = right;
                raise.decay(T).linear(0.0, CVec3::Zero(), unit);
                raise.linear(va.f, va.c, va.d).displace(wa);
                out[j] = xs * damp * (lower.vacuum_overlap() + raise.vacuum_overlap());
              }
              return out;
            };
            // resolvent supplies 1/D; the remaining 1/hw completes 1/(hw D).
            const CVec3 t4 = phase * resolvent(g4, s, D, 1, X) / s.hw;
            l4 += t4;
            mag += rule.weights[i] * s.e * t4.norm();
          }
        }
        acc.head<3>() += rule.weights[i] * l3.real();
        acc.tail<3>() += rule.weights[i] * l4.real();
      }
    }
    if (magnitude) *magnitude = mag;
    return acc;
  };

  using V6 = Eigen::Matrix<double, 6, 1>;
  const double k_lo = ir_scale(s);
  const double k_hi = cross_scale(s);
  const double floor =
      noise_floor([&](double k) { double m = 0.0; angular(k, &m); return m; }, k_lo, k_hi);
  // Both halves in their final units so that one noise floor applies.
  const double w3 = 2.0 * s.e / s.hw;
  auto weighted = [&](double k) -> V6 {
    V6 a = angular(k, nullptr);
    a.head<3>() *= w3;
    a.tail<3>() *= s.e;
    return a;
  };
  const V6 sum = radial(weighted, 0.0, k_lo, k_hi, 1e-6, floor);
  const Vec3 line3 = pref * sum.head<3>();
  const Vec3 line4 = pref * sum.tail<3>();
  return fields.B0.cross(line3 + line4);
}

Vec3 transverse_momentum_term(const model::OscillatorSystem& sys, const model::FieldConfig& fields,
                              const Vec3& Q0, const EngineOptions& opts,
                              const units::PhysicalConstants& kc) {
  if (fields.E0.isZero(0.0) && fields.B0.isZero(0.0) && Q0.isZero(0.0)) return Vec3::Zero();
  const Setup s = make_setup(sys, fields, Q0, false, false, kc);
  const auto rule = make_rule(opts);
  const double pref = mode_sum_prefactor(kc);
  const std::size_t half = rule.directions.size() / 2;

  // <n_k> summed over polarizations for one direction, split into
  // same-particle and cross-particle parts.
  auto occupation = [&](const Vec3& dir, double kn, bool cross, double& mag) {
    const Vec3 k = kn * dir;
    const double D0 = photon_energy(s, k);
    double n = 0.0;
    for (const Vec3& eps : vacuum::polarization_basis(dir)) {
      const auto v = vertices(s, k, eps);
      for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
          const bool same = a == b;
          if (same == cross) continue;
          const Vertex& va = v[a];
          const Vertex& vb = v[b];
          const double D = same ? shifted_energy(s, D0, vb) : D0;
          const CVec3 wa = same ? CVec3::Zero() : va.w;
          const CVec3 wb = same ? CVec3::Zero() : vb.w;
          const cplx phase = same ? cplx(1.0) : cross_phase(s, va, vb);
          Ket right;
          right.displace(-wb).linear(vb.f, vb.c, vb.d);
          auto g = [&](double tau) {
            Ket k2 = right;
            k2.decay(tau).linear(va.f, va.c, va.d).displace(wa);
            return k2.vacuum_overlap();
          };
          const cplx term = phase * resolvent(g, s, D, 2, overlap_exponent(wa, wb));
          n += term.real();
          mag += std::abs(term);
        }
      }
    }
    return n;
  };

  // Antipodal pairs are combined before weighting so that the even part of
  // the occupation cancels exactly.
  auto angular = [&](double kn, bool cross, double* magnitude) -> Vec3 {
    Vec3 acc = Vec3::Zero();
    double mag = 0.0;
    for (std::size_t i = 0; i < half; ++i) {
      const Vec3& dir = rule.directions[i];
      double m = 0.0;
      const double diff = occupation(dir, kn, cross, m) -
                          occupation(rule.directions[i + half], kn, cross, m);
      acc += rule.weights[i] * diff * dir;
      mag += rule.weights[i] * m;
    }
    if (magnitude) *magnitude = pref * s.hbar * kn * mag;
    return pref * s.hbar * kn * acc;
  };

  const double tol = opts.rel_tol;
  Vec3 out = Vec3::Zero();
  for (const bool cross : {false, true}) {
    const double k_hi = cross ? cross_scale(s) : uv_scale(s);
    // The integrand is pure rounding noise, so a coarse floor grid suffices.
    const double floor = noise_floor(
        [&](double k) { double m = 0.0; angular(k, cross, &m); return m; }, ir_scale(s), k_hi,
        1e-13, 2.0);
    out += radial([&](double k) { return angular(k, cross, nullptr); }, 0.0, ir_scale(s), k_hi, tol,
                  floor);
  }
  return out;
}

}  // namespace casimir::engine
