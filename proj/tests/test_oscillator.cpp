#include <cmath>
#include <complex>

#include <doctest.h>

#include "casimir/oscillator.hpp"
#include "casimir/oscillator_oracle.hpp"

using namespace casimir;
using namespace casimir::osc;

namespace {

OscParams params() { return OscParams::from_system(model::hydrogen_like(10.0)); }

}  // namespace

TEST_SUITE("oscillator") {
  TEST_CASE("level enumeration") {
    const auto up = levels_up_to(3);
    CHECK(up.size() == 20);  // (N + 1)(N + 2)(N + 3) / 6
    CHECK(up.front() == OscLevel(0, 0, 0));
    for (std::size_t i = 1; i < up.size(); ++i) CHECK(up[i - 1].total() <= up[i].total());
    CHECK(levels_per_axis(2).size() == 27);
    CHECK_THROWS(OscLevel(-1, 0, 0));
  }

  TEST_CASE("ladder elements") {
    CHECK(position_1d(1, 0) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(position_1d(2, 1) == doctest::Approx(1.0));
    CHECK(position_1d(2, 0) == 0.0);
    const cplx p = momentum_1d(1, 0);
    CHECK(p.real() == doctest::Approx(0.0));
    CHECK(p.imag() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(std::abs(momentum_1d(0, 1) - std::conj(p)) < 1e-15);
  }

  TEST_CASE("ground-state form factor is a Gaussian") {
    for (double q : {0.0, 0.3, 1.0, 2.5}) {
      const cplx v = plane_wave_1d(q, 0, 0);
      CHECK(v.real() == doctest::Approx(std::exp(-q * q / 4.0)).epsilon(1e-14));
      CHECK(std::abs(v.imag()) < 1e-15);
    }
  }

  TEST_CASE("plane-wave elements are Hermitian") {
    const auto p = params();
    const Vec3 k = Vec3(0.4, -0.7, 1.1) / p.sigma;
    for (const auto& l : levels_up_to(3)) {
      for (const auto& s : levels_up_to(2)) {
        const cplx a = plane_wave_element(p, k, l, s);
        const cplx b = std::conj(plane_wave_element(p, -k, s, l));
        CHECK(std::abs(a - b) < 1e-14);
      }
    }
  }

  TEST_CASE("closed-form elements match the quadrature oracle") {
    const auto p = params();
    const Vec3 k = Vec3(0.5, 0.2, -0.8) / p.sigma;
    const std::pair<OscLevel, OscLevel> pairs[] = {
        {{0, 0, 0}, {0, 0, 0}}, {{1, 0, 0}, {0, 0, 0}}, {{2, 1, 0}, {0, 1, 1}}, {{0, 0, 3}, {1, 0, 1}}};
    for (const auto& [l, s] : pairs) {
      const cplx pw = numeric_element_oracle(p, OperatorSpec::plane_wave(k), l, s, 1e-12);
      CHECK(std::abs(plane_wave_element(p, k, l, s) - pw) < 1e-10);
      for (int axis = 0; axis < 3; ++axis) {
        const cplx x = numeric_element_oracle(p, OperatorSpec::position(axis), l, s, 1e-12);
        CHECK(std::abs(position_element(p, l, s, axis) - x) < 1e-10 * p.sigma);
        const double p_unit = p.hbar / p.sigma;
        const cplx m = numeric_element_oracle(p, OperatorSpec::momentum(axis), l, s, 1e-12);
        CHECK(std::abs(momentum_element(p, l, s, axis) - m) < 1e-10 * p_unit);
      }
    }
  }

  TEST_CASE("linear plane-wave element matches the oracle") {
    const auto p = params();
    const Vec3 k = Vec3(0.3, 0.0, 0.6) / p.sigma;
    OperatorSpec op = OperatorSpec::plane_wave(k);
    op.scalar = 0.0;
    op.c_r = Eigen::Vector3cd(cplx(1.0, 0.5), 0.0, cplx(0.0, -2.0)) / p.sigma;
    op.d_p = Eigen::Vector3cd(0.0, cplx(0.7, 0.0), 0.0) * (p.sigma / p.hbar);
    const OscLevel l(1, 0, 1);
    const OscLevel s(0, 1, 0);
    const cplx ref = numeric_element_oracle(p, op, l, s, 1e-12);
    CHECK(std::abs(linear_plane_wave_element(p, op.c_r, op.d_p, k, l, s) - ref) < 1e-10);
  }

  TEST_CASE("completeness over the truncated basis") {
    const auto p = params();
    for (double ks : {0.5, 1.0, 2.0}) {
      const Vec3 k = Vec3(ks / p.sigma, 0.0, 0.0);
      const int n = default_truncation(ks);
      const auto sums = completeness_partial_sums(p, k, n);
      CHECK(sums.size() == static_cast<std::size_t>(n + 1));
      for (std::size_t i = 1; i < sums.size(); ++i) CHECK(sums[i] >= sums[i - 1]);
      CHECK(std::abs(sums.back() - 1.0) < 1e-8);
    }
  }

  TEST_CASE("Hermite functions are normalized") {
    for (int n : {0, 1, 4, 9}) {
      double sum = 0.0;
      const double h = 0.01;
      for (double x = -12.0; x <= 12.0; x += h) sum += h * std::pow(hermite_function(n, x), 2);
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}
