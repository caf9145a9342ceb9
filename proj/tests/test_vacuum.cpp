#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "casimir/vacuum.hpp"

using namespace casimir;
using namespace casimir::vacuum;

namespace {

const units::PhysicalConstants& kc() { return units::codata2018(); }

}  // namespace

TEST_SUITE("vacuum") {
  TEST_CASE("cutoff validation") {
    CHECK_THROWS_AS(Cutoff(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(Cutoff(1.0, 2.0), std::invalid_argument);
    CHECK(Cutoff::infinite_cutoff().infinite());
  }

  TEST_CASE("mode amplitude") {
    const double k = 1e7;
    const double V = 1e-18;
    CHECK(mode_amplitude_squared(k, V) ==
          doctest::Approx(kc().hbar / (2.0 * kc().eps0 * V * k * kc().c)).epsilon(1e-15));
  }

  TEST_CASE("polarization basis is orthonormal and transverse") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    for (int i = 0; i < 20; ++i) {
      const Vec3 n = Vec3(g(rng), g(rng), g(rng)).normalized();
      const auto e = polarization_basis(n);
      CHECK(std::abs(e[0].dot(n)) < 1e-15);
      CHECK(std::abs(e[1].dot(n)) < 1e-15);
      CHECK(std::abs(e[0].dot(e[1])) < 1e-15);
      CHECK(e[0].norm() == doctest::Approx(1.0));
      CHECK(e[1].norm() == doctest::Approx(1.0));
      const auto m = polarization_basis(-n);
      CHECK((m[0] + e[0]).norm() < 1e-15);
      CHECK((m[1] - e[1]).norm() < 1e-15);
    }
    const auto z = polarization_basis(Vec3::UnitZ());
    CHECK(std::abs(z[0].dot(Vec3::UnitZ())) < 1e-15);
  }

  TEST_CASE("angular polarization reduction") {
    const Vec3 u(1.0, 2.0, -0.5);
    const Vec3 v(0.3, -1.0, 2.0);
    const double exact = 8.0 * std::numbers::pi / 3.0 * u.dot(v);
    CHECK(angular_polarization_reduction(u, v) == doctest::Approx(exact).epsilon(1e-15));
    CHECK(angular_polarization_reduction_numeric(u, v) == doctest::Approx(exact).epsilon(1e-12));
  }

  TEST_CASE("mass integral closed form vs quadrature") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> lm(0.0, 4.0);
    std::uniform_real_distribution<double> ll(0.0, 6.0);
    for (int i = 0; i < 5; ++i) {
      const double m = kc().m_electron * std::pow(10.0, lm(rng));
      const Cutoff cut(std::pow(10.0, ll(rng)) * bethe_wavenumber(m));
      const double exact =
          2.0 * m / (kc().hbar * kc().hbar) * std::log1p(kc().hbar * cut.lambda() / (2.0 * m * kc().c));
      CHECK(mass_integral(m, cut) == doctest::Approx(exact).epsilon(1e-13));
      quad::QuadOptions o;
      o.rel_tol = 1e-12;
      CHECK(mass_integral_quadrature(m, cut, o).value == doctest::Approx(exact).epsilon(1e-10));
    }
  }

  TEST_CASE("delta m and the reduced-mass integral") {
    const double m = kc().m_electron;
    const Cutoff cut(1e3 * bethe_wavenumber(m));
    const double a = units::fine_structure(kc());
    const double x = kc().hbar * cut.lambda() / (2.0 * m * kc().c);
    CHECK(delta_mass(m, cut, a) ==
          doctest::Approx(8.0 * a / (3.0 * std::numbers::pi) * m * std::log1p(x)).epsilon(1e-14));
    CHECK(reduced_mass_integral(m, cut) ==
          doctest::Approx(kc().hbar * kc().hbar * mass_integral(m, cut) / m).epsilon(1e-13));
  }

  TEST_CASE("K1 integral antisymmetry and limit") {
    const double m1 = kc().m_proton;
    const double m2 = kc().m_electron;
    for (double f : {1e1, 1e3, 1e5}) {
      const Cutoff cut(f * bethe_wavenumber(m2));
      CHECK(k1_integral(m1, m2, cut) == -k1_integral(m2, m1, cut));
      quad::QuadOptions o;
      o.rel_tol = 1e-11;
      CHECK(k1_integral_quadrature(m1, m2, cut, o).value ==
            doctest::Approx(k1_integral(m1, m2, cut)).epsilon(1e-9));
    }
    CHECK(k1_integral(m1, m1, Cutoff(1e20)) == 0.0);
    const Cutoff far(1e4 * bethe_wavenumber(m1));
    CHECK(k1_integral(m1, m2, far) == doctest::Approx(2.0 * std::log(m1 / m2)).epsilon(1e-3));
    CHECK(k1_integral(m1, m2, Cutoff::infinite_cutoff()) ==
          doctest::Approx(2.0 * std::log(m1 / m2)).epsilon(1e-14));
  }

  TEST_CASE("mass integral grows logarithmically") {
    const double m = kc().m_electron;
    const double b = bethe_wavenumber(m);
    const double d = mass_integral(m, Cutoff(1e8 * b)) - mass_integral(m, Cutoff(1e7 * b));
    CHECK(d * kc().hbar * kc().hbar / (2.0 * m) == doctest::Approx(std::log(10.0)).epsilon(1e-7));
  }
}
