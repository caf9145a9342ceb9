#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "casimir/constants.hpp"

using namespace casimir::units;

TEST_SUITE("units") {
  TEST_CASE("fine structure constant matches CODATA 2018") {
    CHECK(1.0 / fine_structure(codata2018()) == doctest::Approx(137.035999084).epsilon(1e-9));
  }

  TEST_CASE("energy conversions round trip") {
    CHECK(ev_to_joule(1.0) == 1.602176634e-19);
    CHECK(joule_to_ev(ev_to_joule(10.0)) == doctest::Approx(10.0).epsilon(1e-15));
    const double w = energy_to_angular_frequency(ev_to_joule(10.0));
    CHECK(w == doctest::Approx(1.5192674488095104e16).epsilon(1e-14));
    CHECK(angular_frequency_to_energy(w) == doctest::Approx(ev_to_joule(10.0)).epsilon(1e-15));
    CHECK_THROWS_AS(energy_to_angular_frequency(-1.0), std::invalid_argument);
  }

  TEST_CASE("polarizability forms differ by 4 pi eps0") {
    const double a = 1.2e-40;
    const double vol = polarizability_si_to_volume(a);
    CHECK(vol == doctest::Approx(a / (4.0 * std::numbers::pi * codata2018().eps0)).epsilon(1e-15));
    CHECK(polarizability_volume_to_si(vol) == doctest::Approx(a).epsilon(1e-15));
  }

  TEST_CASE("audit reports both readings") {
    const double a = 1.2e-40;
    const auto audit = audit_momentum_conventions(a, 1e5, 17.0);
    CHECK(audit.p_si == doctest::Approx(a * 1e5 * 17.0).epsilon(1e-15));
    const double factor = 4.0 * std::numbers::pi * codata2018().eps0 * codata2018().c;
    CHECK(audit.p_volume == doctest::Approx(audit.p_si / factor).epsilon(1e-14));
    CHECK_FALSE(audit.note.empty());
  }

  TEST_CASE("constant sets are validated") {
    PhysicalConstants k;
    CHECK_NOTHROW(k.validate());
    k.hbar = 0.0;
    CHECK_THROWS_AS(k.validate(), std::invalid_argument);
    k = PhysicalConstants{};
    k.c = std::nan("");
    CHECK_THROWS_AS(k.validate(), std::invalid_argument);
  }
}
