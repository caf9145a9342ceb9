#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "casimir/engine.hpp"

using namespace casimir;
using namespace casimir::engine;

namespace {

const units::PhysicalConstants& kc() { return units::codata2018(); }

model::FieldConfig crossed(double E = 1e5, double B = 17.0) {
  model::FieldConfig f;
  f.E0 = Vec3(E, 0, 0);
  f.B0 = Vec3(0, 0, B);
  return f;
}

double k1_ratio_formula(double m1, double m2) {
  const double a = units::fine_structure(kc());
  return 4.0 * a / (3.0 * std::numbers::pi) * (m1 - m2) / (m1 + m2) * std::log(m1 / m2);
}

double along_classical(const Vec3& k, const model::OscillatorSystem& sys, const model::FieldConfig& f) {
  const Vec3 cl = -model::static_polarizability(sys) * f.cross();
  return k.dot(cl) / cl.squaredNorm();
}

}  // namespace

TEST_SUITE("engine") {
  TEST_CASE("K1 closed form") {
    const auto sys = model::hydrogen_like(10.0);
    const auto f = crossed();
    const Vec3 k1 = casimir_k1(sys, f);
    CHECK(along_classical(k1, sys, f) ==
          doctest::Approx(k1_ratio_formula(sys.m1(), sys.m2())).epsilon(1e-13));
    CHECK(k1.cross(f.cross()).norm() <= 1e-15 * k1.norm() * f.cross().norm());
    CHECK(along_classical(k1, sys, f) == doctest::Approx(0.023250637).epsilon(1e-8));
  }

  TEST_CASE("K1 symmetry properties") {
    const auto sys = model::hydrogen_like(10.0);
    const auto f = crossed();
    const Vec3 k1 = casimir_k1(sys, f);
    CHECK((casimir_k1(sys.swapped(), f) - k1).norm() <= 1e-14 * k1.norm());
    CHECK((casimir_k1(sys, crossed(1e5, -17.0)) + k1).norm() <= 1e-14 * k1.norm());
    CHECK((casimir_k1(sys, crossed(2e5, 17.0)) - 2.0 * k1).norm() <= 1e-14 * k1.norm());
    const model::OscillatorSystem eq(sys.m1(), sys.m1(), sys.charge(), sys.omega0());
    CHECK(casimir_k1(eq, f).norm() == 0.0);
  }

  TEST_CASE("K2 bracket is the same for every mass pair") {
    const double ref = -4.0 / (15.0 * std::sqrt(std::numbers::pi));
    const double pairs[][2] = {{1.0, 1.0}, {1836.15, 1.0}, {1.0, 7.0}, {206.8, 1.0}, {3.0, 3.0}};
    for (const auto& p : pairs) {
      const model::OscillatorSystem sys(p[0] * kc().m_electron, p[1] * kc().m_electron,
                                        kc().e_charge, 1.5e16);
      CHECK(std::abs(casimir_k2_bracket(sys) - ref) <= 1e-12);
    }
  }

  TEST_CASE("K2 hydrogen ratio and direction") {
    const auto sys = model::hydrogen_like(10.0);
    const auto f = crossed();
    const Vec3 k2 = casimir_k2(sys, f);
    CHECK(k2.cross(f.cross()).norm() <= 1e-14 * k2.norm() * f.cross().norm());
    CHECK(std::abs(along_classical(k2, sys, f)) == doctest::Approx(4.858e-6).epsilon(1e-3));
    CHECK((casimir_k2(sys, crossed(3e5, 17.0)) - 3.0 * k2).norm() <= 1e-14 * k2.norm());
  }

  TEST_CASE("Doppler bound") {
    const auto sys = model::hydrogen_like(10.0);
    CHECK(doppler_bound(sys) == doctest::Approx(units::ev_to_joule(10.0) /
                                                (sys.total_mass() * kc().c * kc().c))
                                    .epsilon(1e-14));
  }

  TEST_CASE("Omega context validation") {
    OmegaContext ctx{model::hydrogen_like(10.0), crossed(), Vec3::Zero(), Vec3(0, 0, 1e8),
                     Vec3::UnitX()};
    CHECK_NOTHROW(ctx.validate());
    ctx.eps = Vec3::UnitZ();
    CHECK_THROWS_AS(ctx.validate(), std::invalid_argument);
    ctx.eps = Vec3(2.0, 0, 0);
    CHECK_THROWS_AS(ctx.validate(), std::invalid_argument);
  }

  TEST_CASE("Omega is odd under k -> -k with eps -> -eps at zero fields") {
    const auto sys = model::hydrogen_like(10.0);
    const double s = model::ground_state_width(sys);
    const Vec3 k = Vec3(0.0, 0.3, 0.4) / s;
    OmegaContext a{sys, model::FieldConfig{}, Vec3::Zero(), k, Vec3::UnitX()};
    OmegaContext b{sys, model::FieldConfig{}, Vec3::Zero(), -k, -Vec3::UnitX()};
    const osc::OscLevel l(1, 0, 0);
    const osc::OscLevel g;
    // The vertex is real-linear in eps; <l|Omega_k|0> and <0|Omega_-k|l>* differ by the sign of eps.
    const auto x = omega_element(a, l, g);
    const auto y = omega_element(b, g, l);
    CHECK(std::abs(x - std::conj(y) * -1.0) <= 1e-12 * std::abs(x));
  }

  TEST_CASE("discrete K-perturb without modes is Q0") {
    const auto sys = model::hydrogen_like(10.0);
    const auto f = crossed();
    const Vec3 Q0 = model::classical_pseudo_momentum(sys, f, Vec3::Zero());
    const auto d = kperturb_discrete(sys, f, Q0, {}, 2);
    CHECK(d.correction().norm() == 0.0);
    CHECK(d.total() == d.q0);
  }

  TEST_CASE("mass-like line at zero fields is odd in Q0 and parallel to it") {
    const auto sys = model::hydrogen_like(10.0);
    const model::FieldConfig none;
    const double b = vacuum::bethe_wavenumber(kc().m_electron);
    const vacuum::Cutoff cut(1e2 * b);
    const Vec3 Q0(1e-26, 0.0, 0.0);
    EngineOptions o;
    o.rel_tol = 1e-7;
    const Vec3 p = line_two(sys, none, Q0, cut, o).total();
    const Vec3 m = line_two(sys, none, -Q0, cut, o).total();
    CHECK(p.norm() > 0.0);
    CHECK(std::hypot(p.y(), p.z()) <= 1e-6 * p.norm());
    CHECK((p + m).norm() <= 1e-6 * p.norm());
  }

  TEST_CASE("closed-form breakdown") {
    const auto sys = model::hydrogen_like(10.0);
    const auto f = crossed();
    const Vec3 Q0 = model::classical_pseudo_momentum(sys, f, Vec3::Zero());
    const auto b = closed_form_breakdown(sys, f, Q0);
    CHECK_FALSE(b.numeric);
    CHECK(b.classical == Q0);
    CHECK(b.casimir_k1 == casimir_k1(sys, f));
    CHECK(b.casimir_k2 == casimir_k2(sys, f));
    CHECK(b.raw_field_linear.norm() == 0.0);
  }

  TEST_CASE("mode-sum prefactor") {
    const double a = units::fine_structure(kc());
    CHECK(mode_sum_prefactor() ==
          doctest::Approx(a * kc().hbar * kc().hbar / (4.0 * std::numbers::pi * std::numbers::pi))
              .epsilon(1e-14));
  }
}
