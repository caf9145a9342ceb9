#include <cmath>
#include <complex>
#include <stdexcept>

#include <doctest.h>

#include "casimir/coherent.hpp"
#include "casimir/oscillator.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/resolvent.hpp"

using namespace casimir;
using coherent::CVec3;
using coherent::Ket;
using coherent::Poly;
using cplx = std::complex<double>;

namespace {

double moment_by_quadrature(double p, double X, int j) {
  quad::QuadOptions o;
  o.rel_tol = 1e-13;
  // y = e^-t turns the endpoint singularities into exponential decay.
  return quad::integrate_to_infinity(
             [&](double t) {
               const double y = std::exp(-t);
               return std::pow(y, p) * std::exp(X * y) * std::pow(t, j);
             },
             0.0, o)
      .value;
}

}  // namespace

TEST_SUITE("resolvent") {
  TEST_CASE("Kummer moments vs quadrature") {
    const double cases[][2] = {{1.0, 0.0}, {2.5, -3.0}, {0.7, 1.5}, {3.3, -2.0}, {4.0, -50.0}};
    for (const auto& c : cases) {
      const auto m = engine::kummer_moments(c[0], c[1]);
      CHECK(m[0] == doctest::Approx(moment_by_quadrature(c[0], c[1], 0)).epsilon(1e-11));
      CHECK(m[1] == doctest::Approx(moment_by_quadrature(c[0], c[1], 1)).epsilon(1e-11));
    }
    CHECK(engine::kummer_moments(2.0, 0.0)[0] == doctest::Approx(0.5));
    CHECK(engine::kummer_moments(2.0, 0.0)[1] == doctest::Approx(0.25));
    CHECK_THROWS_AS(engine::kummer_moments(0.0, 1.0), std::invalid_argument);
  }

  TEST_CASE("Laplace chain is exact for e^(Xy) times a quintic") {
    const double X = -1.7;
    const double p = 1.3;
    auto g = [&](double tau) {
      const double y = std::exp(-tau);
      return std::exp(X * y) * (0.5 - y + 3.0 * y * y - 0.25 * std::pow(y, 5));
    };
    quad::QuadOptions o;
    o.rel_tol = 1e-13;
    for (int power : {1, 2}) {
      const double ref =
          quad::integrate_to_infinity(
              [&](double t) { return std::pow(t, power - 1) * std::exp(-p * t) * g(t); }, 0.0, o)
              .value;
      CHECK(engine::laplace_chain(g, p, X, power) == doctest::Approx(ref).epsilon(1e-11));
    }
    auto gc = [&](double tau) { return cplx(0.0, 2.0) * g(tau); };
    const cplx c = engine::laplace_chain(gc, p, X, 1);
    CHECK(c.imag() == doctest::Approx(2.0 * engine::laplace_chain(g, p, X, 1)).epsilon(1e-14));
  }

  TEST_CASE("polynomial argument shift round trip") {
    const CVec3 d1(cplx(1.0, 0.5), 0.0, cplx(0.0, -1.0));
    const CVec3 d2(0.3, cplx(0.2, 0.1), 1.0);
    const Poly p = Poly::one().times_creation(d1).times_creation(d2) + Poly::one() * cplx(0.5);
    const CVec3 v(cplx(0.2, -0.4), 0.7, cplx(0.0, 0.3));
    const Poly back = p.shifted_argument(v).shifted_argument(-v);
    for (int a = 0; a <= 2; ++a) {
      for (int b = 0; b <= 2 - a; ++b) {
        for (int c = 0; c <= 2 - a - b; ++c) {
          CHECK(std::abs(back.coefficient(a, b, c) - p.coefficient(a, b, c)) < 1e-14);
        }
      }
    }
    Poly high = Poly::one();
    for (int i = 0; i < Poly::kMaxDegree; ++i) high = high.times_creation(d1);
    CHECK_THROWS_AS(high.times_creation(d1), std::length_error);
  }

  TEST_CASE("coherent chains reproduce oscillator matrix elements") {
    const auto p = osc::OscParams::from_system(model::hydrogen_like(10.0));
    const Vec3 q = Vec3(0.4, -0.2, 0.9) / p.sigma;
    Ket k;
    k.displace(coherent::displacement_for(q, p.sigma));
    CHECK(std::abs(k.vacuum_overlap() - osc::plane_wave_element(p, q, osc::OscLevel())) < 1e-14);
    // <0| a_x e^{iq.r} |0> = <1,0,0| e^{iq.r} |0>
    CHECK(std::abs(k.lowered_overlap()(0) -
                   osc::plane_wave_element(p, q, osc::OscLevel(1, 0, 0))) < 1e-14);
    // <0| e^{-q.r} x e^{iq.r} |0> through the linear term.
    Ket x;
    x.displace(coherent::displacement_for(q, p.sigma))
        .linear(0.0, CVec3(1.0, 0.0, 0.0), CVec3(1.0, 0.0, 0.0))
        .displace(coherent::displacement_for(-q, p.sigma));
    CHECK(std::abs(x.vacuum_overlap()) < 1e-14);
  }

  TEST_CASE("decay projects on the vacuum") {
    Ket k;
    k.linear(0.0, CVec3::Zero(), CVec3(1.0, 0.0, 0.0)).decay(2.0).linear(0.0, CVec3(1.0, 0.0, 0.0), CVec3::Zero());
    CHECK(k.vacuum_overlap().real() == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
  }
}
