#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "casimir/engine.hpp"
#include "casimir/lanczos.hpp"

namespace casimir::oracle {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Vec3Op = std::array<Matrix, 3>;

/// Truncated oscillator levels times a few photon modes.
struct DiscretizedModel {
  int osc_nmax = 4;  // per-axis truncation
  std::vector<engine::DiscreteMode> modes;
  int max_photons_per_mode = 1;
  std::size_t max_dimension = 4000;  // dense storage

  std::size_t dimension() const;
  /// Throws std::invalid_argument on bad truncations, non-transverse or
  /// non-unit polarizations, or a dimension above max_dimension.
  void validate() const;
};

/// |l, Q, n_k>: oscillator level, photon occupations and the oscillator's
/// recoil label Q = Q0 - sum hbar k n_k.
struct BasisState {
  osc::OscLevel level;
  std::vector<int> photons;
  Vec3 recoil = Vec3::Zero();

  std::string label() const;
};

/// Product basis ordered photon configuration major, oscillator level minor.
std::vector<BasisState> product_basis(const DiscretizedModel& model, const Vec3& Q0,
                                      const units::PhysicalConstants& kc = units::codata2018());

/// H = H0 + H_F + W in the product basis. H0 + H_F is diagonal:
/// hbar omega0 (N + 3/2) + Q^2 / 2M + sum hbar c k (n + 1/2). W is truncated to
/// one-photon transitions: sum_k e A_k (a_k Omega_k + a_k^dag Omega_k^dag), with
/// Omega_k evaluated at the ground-sector Q0. coupling_scale multiplies every A_k.
struct Hamiltonian {
  std::vector<BasisState> basis;
  Eigen::VectorXd unperturbed;
  Matrix coupling;
  std::size_t ground = 0;  // index of |0, Q0, 0>

  Matrix full() const;
};

Hamiltonian build_hamiltonian(const model::OscillatorSystem& sys, const model::FieldConfig& fields,
                              const Vec3& Q0, const DiscretizedModel& model,
                              double coupling_scale = 1.0,
                              const units::PhysicalConstants& kc = units::codata2018());

/// Lowest eigenpair by Lanczos; throws if the residual exceeds tol * ||H||.
linalg::EigenPair exact_ground_state(const Matrix& H, double tol = 1e-10);

/// Pieces of the pseudo-momentum in the product basis. The kinetic momentum is
/// represented by the sector label Q, so that Q = P_kin + e B0 x r holds on the
/// unperturbed states; r is the oscillator fluctuation about r0. The diagonal is
/// stored relative to Q0 (recoil = -sum hbar k n_k) so that <K> - Q0 does not
/// suffer cancellation.
struct PseudoMomentum {
  Vec3 q0 = Vec3::Zero();
  Vec3Op recoil;    // P_kin - Q0, diagonal
  Vec3Op magnetic;  // e B0 x r
  Vec3Op delta_a;   // e DeltaA
  Vec3Op field;     // sum hbar k (n_k [+ 1/2])

  /// Eq. (K): P_kin + e B0 x r + e DeltaA + field, minus Q0 if relative.
  Vec3Op kinetic_form(bool relative = false) const;
  /// Eq. (Kcanoniq): P + (e/2) B0 x r + field with P = P_kin + (e/2) B0 x r + e DeltaA.
  Vec3Op canonical_form(bool relative = false) const;
};

PseudoMomentum pseudo_momentum_operator(const model::OscillatorSystem& sys,
                                        const model::FieldConfig& fields, const Vec3& Q0,
                                        const DiscretizedModel& model, double coupling_scale = 1.0,
                                        bool zero_point = false,
                                        const units::PhysicalConstants& kc = units::codata2018());

/// Re <psi| K_i |psi> for a normalized psi.
Vec3 expectation(const Vec3Op& K, const Vector& psi);

/// ||[K_i, H] psi|| summed in quadrature over the components, divided by
/// norm_scale(H) * max_i norm_scale(K_i).
double commutator_residual(const Vec3Op& K, const Matrix& H, const Vector& psi);

/// Rayleigh-Schrodinger ground state to second order, split by order. psi2
/// includes the normalization term -1/2 sum |W_n0|^2 / (E_0 - E_n)^2 |0>.
struct PerturbativeState {
  Vector psi0;
  Vector psi1;
  Vector psi2;

  Vector state(int order) const;
};

/// unperturbed: diagonal of H0 + H_F; ground: index of the unperturbed ground
/// state. Throws std::runtime_error naming the colliding states (via labels, if
/// given) when |E_0 - E_n| <= degeneracy_tol * max|E| for some n != ground.
PerturbativeState perturbative_ground_state(
    const Eigen::VectorXd& unperturbed, const Matrix& coupling, std::size_t ground, int order = 2,
    double degeneracy_tol = 1e-12,
    const std::function<std::string(std::size_t)>& labels = nullptr);

/// <K> through second order: <0|K|0> + 2 Re <0|K|psi1> + 2 Re <0|K|psi2> + <psi1|K|psi1>.
Vec3 perturbative_expectation(const Vec3Op& K, const PerturbativeState& state);

struct CompareReport {
  double coupling_scale = 0.0;
  std::size_t dimension = 0;
  Vec3 exact = Vec3::Zero();          // <K> - Q0 in the exact ground state
  Vec3 perturbative = Vec3::Zero();   // second-order <K> - Q0 from the RS state
  Vec3 discrete = Vec3::Zero();       // engine::kperturb_discrete correction
  double difference = 0.0;            // |exact - perturbative|
  double discrete_mismatch = 0.0;     // |perturbative - discrete| / |discrete|
  double ground_energy = 0.0;
  double lanczos_residual = 0.0;
  double overlap = 0.0;               // |<psi_exact | psi_pert>| with psi_pert normalized
  double commutator = 0.0;            // commutator_residual of the kinetic form
};

CompareReport compare_engines(const model::OscillatorSystem& sys, const model::FieldConfig& fields,
                              const Vec3& Q0, const DiscretizedModel& model, double coupling_scale,
                              const units::PhysicalConstants& kc = units::codata2018());

struct CouplingSweep {
  std::vector<CompareReport> points;
  double slope = 0.0;                 // d ln|exact - perturbative| / d ln s
  double max_discrete_mismatch = 0.0;
};

/// compare_engines at each scale and a least-squares log-log slope.
CouplingSweep coupling_sweep(const model::OscillatorSystem& sys, const model::FieldConfig& fields,
                             const Vec3& Q0, const DiscretizedModel& model,
                             const std::vector<double>& scales = {1.0, 0.5, 0.25, 0.125},
                             const units::PhysicalConstants& kc = units::codata2018());

/// Default toy problem (also the oracle mode of the CLI): m1 = 3 m_e, m2 = m_e, hbar omega0 = 10 eV, fields
/// exaggerated to r0 ~ 0.3 sigma and e B0 sigma^2 / hbar = 0.3, two modes with
/// k sigma = 0.02 and 0.6, osc_nmax = 4, one photon per mode, and the
/// quantization volume chosen so the strongest one-photon coupling is 0.15 of
/// its energy gap.
struct ToyProblem {
  model::OscillatorSystem sys;
  model::FieldConfig fields;
  Vec3 Q0 = Vec3::Zero();
  DiscretizedModel model;
  double volume = 0.0;  // m^3
};

ToyProblem toy_problem(const units::PhysicalConstants& kc = units::codata2018());

}  // namespace casimir::oracle
