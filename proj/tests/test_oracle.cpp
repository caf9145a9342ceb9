#include <cmath>
#include <stdexcept>
#include <string>

#include <doctest.h>

#include "casimir/fock_oracle.hpp"

using namespace casimir;
using namespace casimir::oracle;

namespace {

const units::PhysicalConstants& kc() { return units::codata2018(); }

double hermitian_defect(const Matrix& m) { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("toy model dimensions and basis") {
    const auto toy = toy_problem();
    CHECK(toy.model.dimension() == 125 * 4);
    CHECK_NOTHROW(toy.model.validate());
    const auto basis = product_basis(toy.model, toy.Q0);
    REQUIRE(basis.size() == toy.model.dimension());
    CHECK(basis.front().level == osc::OscLevel());
    CHECK(basis.front().recoil == toy.Q0);
    CHECK(basis.front().label().find("l=(0,0,0)") != std::string::npos);
    // Photon configuration major: the oscillator level cycles fastest.
    CHECK(basis[1].photons == basis[0].photons);
    CHECK(basis[125].photons != basis[0].photons);
  }

  TEST_CASE("model validation") {
    auto toy = toy_problem();
    auto m = toy.model;
    m.osc_nmax = -1;
    CHECK_THROWS_AS(m.validate(), std::invalid_argument);
    m = toy.model;
    m.modes[0].eps = m.modes[0].k.normalized();
    CHECK_THROWS_AS(m.validate(), std::invalid_argument);
    m = toy.model;
    m.max_dimension = 100;
    CHECK_THROWS_AS(m.validate(), std::invalid_argument);
  }

  TEST_CASE("Hamiltonian structure") {
    const auto toy = toy_problem();
    const auto H = build_hamiltonian(toy.sys, toy.fields, toy.Q0, toy.model);
    CHECK(hermitian_defect(H.coupling) == 0.0);
    CHECK(H.coupling.diagonal().cwiseAbs().maxCoeff() == 0.0);
    double zp = 0.0;
    for (const auto& mode : toy.model.modes) zp += 0.5 * kc().hbar * kc().c * mode.k.norm();
    const double E0 = 1.5 * kc().hbar * toy.sys.omega0() +
                      toy.Q0.squaredNorm() / (2.0 * toy.sys.total_mass()) + zp;
    CHECK(H.unperturbed(static_cast<Eigen::Index>(H.ground)) == doctest::Approx(E0).epsilon(1e-14));
    for (Eigen::Index i = 0; i < H.unperturbed.size(); ++i) CHECK(H.unperturbed(i) >= E0 * (1 - 1e-15));
  }

  TEST_CASE("zero coupling leaves the unperturbed ground state") {
    const auto toy = toy_problem();
    const auto H = build_hamiltonian(toy.sys, toy.fields, toy.Q0, toy.model, 0.0);
    const auto g = exact_ground_state(H.full());
    CHECK(g.value == doctest::Approx(H.unperturbed(static_cast<Eigen::Index>(H.ground))).epsilon(1e-14));
    const auto K = pseudo_momentum_operator(toy.sys, toy.fields, toy.Q0, toy.model, 0.0);
    CHECK(expectation(K.kinetic_form(true), g.vector).norm() <= 1e-12 * toy.Q0.norm());
  }

  TEST_CASE("pseudo-momentum operator forms") {
    const auto toy = toy_problem();
    const auto H = build_hamiltonian(toy.sys, toy.fields, toy.Q0, toy.model);
    const auto K = pseudo_momentum_operator(toy.sys, toy.fields, toy.Q0, toy.model);
    const auto kin = K.kinetic_form(true);
    const auto can = K.canonical_form(true);
    for (int i = 0; i < 3; ++i) {
      CHECK(hermitian_defect(kin[static_cast<std::size_t>(i)]) <= 1e-12 * toy.Q0.norm());
      CHECK((kin[static_cast<std::size_t>(i)] - can[static_cast<std::size_t>(i)]).cwiseAbs().maxCoeff() <=
            1e-12 * toy.Q0.norm());
    }
    const auto g = exact_ground_state(H.full());
    const Vec3 absolute = expectation(K.kinetic_form(false), g.vector);
    const Vec3 relative = expectation(kin, g.vector);
    CHECK((absolute - toy.Q0 - relative).norm() <= 1e-12 * toy.Q0.norm());
  }

  TEST_CASE("zero-point photon momentum") {
    const auto toy = toy_problem();
    const auto K = pseudo_momentum_operator(toy.sys, toy.fields, toy.Q0, toy.model, 1.0, true);
    const auto basis = product_basis(toy.model, toy.Q0);
    const auto& k0 = toy.model.modes[0].k;
    const auto& k1 = toy.model.modes[1].k;
    for (std::size_t a = 0; a < basis.size(); a += 37) {
      const Vec3 expected = kc().hbar * ((basis[a].photons[0] + 0.5) * k0 + (basis[a].photons[1] + 0.5) * k1);
      for (int i = 0; i < 3; ++i) {
        CHECK(K.field[static_cast<std::size_t>(i)](static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a))
                  .real() == doctest::Approx(expected(i)).epsilon(1e-14));
      }
    }
  }

  TEST_CASE("Rayleigh-Schrodinger state vs 2x2 exact") {
    Eigen::VectorXd e(2);
    e << 0.0, 1.0;
    double prev = 0.0;
    for (double g : {0.04, 0.02, 0.01}) {
      Matrix W = Matrix::Zero(2, 2);
      W(0, 1) = W(1, 0) = g;
      const auto s = perturbative_ground_state(e, W, 0);
      Matrix H = W;
      H(1, 1) += 1.0;
      auto x = linalg::dense_lowest(H).vector;
      x *= std::abs(x(0)) / x(0);
      const double err = (s.state(2) - x).norm();
      CHECK(err <= 2.0 * g * g * g);
      if (prev > 0.0) CHECK(err < prev / 6.0);
      prev = err;
      CHECK(std::abs(s.psi1(1) + g) <= 1e-15);
      CHECK(s.psi2(0).real() == doctest::Approx(-0.5 * g * g));
    }
  }

  TEST_CASE("degenerate denominators are named") {
    Eigen::VectorXd e(3);
    e << 1.0, 2.0, 1.0;
    const Matrix W = Matrix::Zero(3, 3);
    try {
      perturbative_ground_state(e, W, 0, 2, 1e-12, [](std::size_t i) { return "state" + std::to_string(i); });
      FAIL("expected an exception");
    } catch (const std::runtime_error& ex) {
      const std::string msg = ex.what();
      CHECK(msg.find("state0") != std::string::npos);
      CHECK(msg.find("state2") != std::string::npos);
    }
    CHECK_THROWS_AS(perturbative_ground_state(e, W, 0, 3), std::invalid_argument);
  }

  TEST_CASE("coupling sweep and discrete engine agreement") {
    const auto toy = toy_problem();
    const auto sweep = coupling_sweep(toy.sys, toy.fields, toy.Q0, toy.model);
    CHECK(sweep.slope >= 2.7);
    CHECK(sweep.max_discrete_mismatch <= 1e-8);
    for (const auto& p : sweep.points) {
      CHECK(p.overlap == doctest::Approx(1.0).epsilon(1e-3));
      CHECK(p.lanczos_residual <= 1e-10);
    }
    CHECK_THROWS_AS(coupling_sweep(toy.sys, toy.fields, toy.Q0, toy.model, {1.0}), std::invalid_argument);
  }

  TEST_CASE("reversing B0 reverses the field-linear correction") {
    const auto toy = toy_problem();
    auto flipped = toy.fields;
    flipped.B0 = -flipped.B0;
    const Vec3 u = toy.fields.cross().normalized();
    const Vec3 Q0f = model::classical_pseudo_momentum(
        toy.sys, flipped, model::velocity_from_pseudo_momentum(toy.sys, toy.fields, toy.Q0));
    const double a = compare_engines(toy.sys, toy.fields, toy.Q0, toy.model, 1.0).exact.dot(u);
    const double b = compare_engines(toy.sys, flipped, Q0f, toy.model, 1.0).exact.dot(u);
    CHECK(a * b < 0.0);
    CHECK(std::abs(a + b) <= 1e-2 * std::abs(a - b));
  }

  TEST_CASE("commutator residual shrinks with the oscillator truncation") {
    const auto toy = toy_problem();
    double prev = 1e300;
    for (int n = 1; n <= 4; ++n) {
      auto m = toy.model;
      m.osc_nmax = n;
      const auto r = compare_engines(toy.sys, toy.fields, toy.Q0, m, 1.0);
      CHECK(r.commutator < prev);
      prev = r.commutator;
    }
  }
}
