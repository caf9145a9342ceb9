#include "casimir/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "casimir/vacuum.hpp"

namespace casimir::oracle {

namespace {

using osc::OscLevel;

Vec3Op zero_op(std::size_t n) {
  return {Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)),
          Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)),
          Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n))};
}

Vec3Op add(const Vec3Op& a, const Vec3Op& b, double scale_b = 1.0) {
  Vec3Op out = a;
  for (int i = 0; i < 3; ++i) out[i] += scale_b * b[i];
  return out;
}

// Photon configurations in lexicographic order, last mode fastest.
std::vector<std::vector<int>> photon_configurations(std::size_t modes, int max_n) {
  std::vector<std::vector<int>> out{std::vector<int>(modes, 0)};
  for (std::size_t m = 0; m < modes; ++m) {
    std::vector<std::vector<int>> next;
    for (const auto& c : out) {
      for (int n = 0; n <= max_n; ++n) {
        auto d = c;
        d[m] = n;
        next.push_back(d);
      }
    }
    out = std::move(next);
  }
  return out;
}

// Index of the state with photon configuration `photons` and level index `li`.
struct Indexer {
  std::size_t levels;
  std::size_t modes;
  int max_n;

  std::size_t operator()(const std::vector<int>& photons, std::size_t li) const {
    std::size_t c = 0;
    for (std::size_t m = 0; m < modes; ++m) {
      c = c * static_cast<std::size_t>(max_n + 1) + static_cast<std::size_t>(photons[m]);
    }
    return c * levels + li;
  }
};

// Visits every pair (lower, upper) where upper has one more photon in `mode`.
template <class F>
void for_each_creation(const std::vector<BasisState>& basis, const Indexer& idx, std::size_t mode,
                       F f) {
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const auto& st = basis[a];
    if (st.photons[mode] >= idx.max_n) continue;
    auto up = st.photons;
    up[mode] += 1;
    const std::size_t li = a % idx.levels;
    for (std::size_t lj = 0; lj < idx.levels; ++lj) {
      f(a, idx(up, lj), li, lj, std::sqrt(static_cast<double>(up[mode])));
    }
  }
}

}  // namespace

std::size_t DiscretizedModel::dimension() const {
  if (osc_nmax < 0 || max_photons_per_mode < 0) return 0;
  std::size_t d = osc::levels_per_axis(osc_nmax).size();
  for (std::size_t m = 0; m < modes.size(); ++m) d *= static_cast<std::size_t>(max_photons_per_mode + 1);
  return d;
}

void DiscretizedModel::validate() const {
  if (osc_nmax < 0) throw std::invalid_argument("DiscretizedModel: osc_nmax must be >= 0");
  if (max_photons_per_mode < 0) {
    throw std::invalid_argument("DiscretizedModel: max_photons_per_mode must be >= 0");
  }
  for (const auto& m : modes) {
    if (!(m.k.norm() > 0.0)) throw std::invalid_argument("DiscretizedModel: mode with k = 0");
    if (std::abs(m.eps.norm() - 1.0) > 1e-12 || std::abs(m.eps.dot(m.k)) > 1e-12 * m.k.norm()) {
      throw std::invalid_argument("DiscretizedModel: polarization must be unit and transverse");
    }
    if (!(m.amplitude >= 0.0)) throw std::invalid_argument("DiscretizedModel: negative amplitude");
  }
  if (dimension() > max_dimension) {
    throw std::invalid_argument("DiscretizedModel: dimension " + std::to_string(dimension()) +
                                " exceeds max_dimension " + std::to_string(max_dimension));
  }
}

std::string BasisState::label() const {
  std::ostringstream os;
  os << "|l=(" << level[0] << "," << level[1] << "," << level[2] << "), n=(";
  for (std::size_t i = 0; i < photons.size(); ++i) os << (i ? "," : "") << photons[i];
  os << ")>";
  return os.str();
}

std::vector<BasisState> product_basis(const DiscretizedModel& model, const Vec3& Q0,
                                      const units::PhysicalConstants& kc) {
  model.validate();
  const auto levels = osc::levels_per_axis(model.osc_nmax);
  std::vector<BasisState> out;
  out.reserve(model.dimension());
  for (const auto& photons : photon_configurations(model.modes.size(), model.max_photons_per_mode)) {
    Vec3 recoil = Q0;
    for (std::size_t m = 0; m < photons.size(); ++m) recoil -= kc.hbar * photons[m] * model.modes[m].k;
    for (const auto& l : levels) out.push_back({l, photons, recoil});
  }
  return out;
}

Matrix Hamiltonian::full() const {
  Matrix H = coupling;
  H.diagonal() += unperturbed.cast<std::complex<double>>();
  return H;
}

Hamiltonian build_hamiltonian(const model::OscillatorSystem& sys, const model::FieldConfig& fields,
                              const Vec3& Q0, const DiscretizedModel& model, double coupling_scale,
                              const units::PhysicalConstants& kc) {
  Hamiltonian h;
  h.basis = product_basis(model, Q0, kc);
  const auto levels = osc::levels_per_axis(model.osc_nmax);
  const Indexer idx{levels.size(), model.modes.size(), model.max_photons_per_mode};
  const auto n = static_cast<Eigen::Index>(h.basis.size());
  const double hw = kc.hbar * sys.omega0();
  const double M = sys.total_mass();

  h.unperturbed.resize(n);
  for (Eigen::Index a = 0; a < n; ++a) {
    const auto& st = h.basis[static_cast<std::size_t>(a)];
    double E = hw * (st.level.total() + 1.5) + st.recoil.squaredNorm() / (2.0 * M);
    for (std::size_t m = 0; m < model.modes.size(); ++m) {
      E += kc.hbar * kc.c * model.modes[m].k.norm() * (st.photons[m] + 0.5);
    }
    h.unperturbed(a) = E;
  }
  h.ground = idx(std::vector<int>(model.modes.size(), 0), 0);

  h.coupling = Matrix::Zero(n, n);
  for (std::size_t m = 0; m < model.modes.size(); ++m) {
    const auto& mode = model.modes[m];
    const engine::OmegaContext ctx{sys, fields, Q0, mode.k, mode.eps};
    Matrix omega(static_cast<Eigen::Index>(levels.size()), static_cast<Eigen::Index>(levels.size()));
    for (std::size_t i = 0; i < levels.size(); ++i) {
      for (std::size_t j = 0; j < levels.size(); ++j) {
        omega(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            engine::omega_element(ctx, levels[i], levels[j], kc);
      }
    }
    const double g = sys.charge() * mode.amplitude * coupling_scale;
    // <l, n| a Omega |s, n+1> = sqrt(n+1) Omega_{l,s}
    for_each_creation(h.basis, idx, m, [&](std::size_t lo, std::size_t up, std::size_t li,
                                           std::size_t lj, double root) {
      const auto v = g * root * omega(static_cast<Eigen::Index>(li), static_cast<Eigen::Index>(lj));
      h.coupling(static_cast<Eigen::Index>(lo), static_cast<Eigen::Index>(up)) += v;
      h.coupling(static_cast<Eigen::Index>(up), static_cast<Eigen::Index>(lo)) += std::conj(v);
    });
  }
  return h;
}

linalg::EigenPair exact_ground_state(const Matrix& H, double tol) {
  return linalg::lanczos_lowest(H, tol);
}

Vec3Op PseudoMomentum::kinetic_form(bool relative) const {
  Vec3Op K = add(add(add(recoil, magnetic), delta_a), field);
  if (!relative) {
    for (int i = 0; i < 3; ++i) K[i].diagonal().array() += q0(i);
  }
  return K;
}

Vec3Op PseudoMomentum::canonical_form(bool relative) const {
  // P = P_kin + (e/2) B0 x r + e DeltaA
  Vec3Op P = add(add(recoil, magnetic, 0.5), delta_a);
  Vec3Op K = add(add(P, magnetic, 0.5), field);
  if (!relative) {
    for (int i = 0; i < 3; ++i) K[i].diagonal().array() += q0(i);
  }
  return K;
}

PseudoMomentum pseudo_momentum_operator(const model::OscillatorSystem& sys,
                                        const model::FieldConfig& fields, const Vec3& Q0,
                                        const DiscretizedModel& model, double coupling_scale,
                                        bool zero_point, const units::PhysicalConstants& kc) {
  const auto basis = product_basis(model, Q0, kc);
  const auto levels = osc::levels_per_axis(model.osc_nmax);
  const Indexer idx{levels.size(), model.modes.size(), model.max_photons_per_mode};
  const std::size_t n = basis.size();
  const auto p = osc::OscParams::from_system(sys, kc);
  const double e = sys.charge();

  PseudoMomentum K;
  K.q0 = Q0;
  K.recoil = zero_op(n);
  K.magnetic = zero_op(n);
  K.delta_a = zero_op(n);
  K.field = zero_op(n);

  for (std::size_t a = 0; a < n; ++a) {
    const auto ia = static_cast<Eigen::Index>(a);
    Vec3 photon = Vec3::Zero();
    for (std::size_t m = 0; m < model.modes.size(); ++m) {
      photon += kc.hbar * basis[a].photons[m] * model.modes[m].k;
    }
    Vec3 field = photon;
    if (zero_point) {
      for (const auto& mode : model.modes) field += 0.5 * kc.hbar * mode.k;
    }
    for (int i = 0; i < 3; ++i) {
      K.recoil[i](ia, ia) = -photon(i);
      K.field[i](ia, ia) = field(i);
    }
  }

  // e B0 x r acts on the oscillator only, diagonal in photons.
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t base = a - a % levels.size();
    const std::size_t li = a % levels.size();
    for (std::size_t lj = 0; lj < levels.size(); ++lj) {
      if (std::abs(levels[li].total() - levels[lj].total()) != 1) continue;
      const Vec3 r(osc::position_element(p, levels[li], levels[lj], 0),
                   osc::position_element(p, levels[li], levels[lj], 1),
                   osc::position_element(p, levels[li], levels[lj], 2));
      const Vec3 m = e * fields.B0.cross(r);
      for (int i = 0; i < 3; ++i) {
        K.magnetic[i](static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(base + lj)) = m(i);
      }
    }
  }

  for (std::size_t mi = 0; mi < model.modes.size(); ++mi) {
    const auto& mode = model.modes[mi];
    Matrix delta(static_cast<Eigen::Index>(levels.size()), static_cast<Eigen::Index>(levels.size()));
    for (std::size_t i = 0; i < levels.size(); ++i) {
      for (std::size_t j = 0; j < levels.size(); ++j) {
        delta(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            engine::delta_phase_element(sys, fields, Q0, mode.k, levels[i], levels[j], kc);
      }
    }
    const double g = e * mode.amplitude * coupling_scale;
    for_each_creation(basis, idx, mi, [&](std::size_t lo, std::size_t up, std::size_t li,
                                          std::size_t lj, double root) {
      const auto v = g * root * delta(static_cast<Eigen::Index>(li), static_cast<Eigen::Index>(lj));
      for (int i = 0; i < 3; ++i) {
        K.delta_a[i](static_cast<Eigen::Index>(lo), static_cast<Eigen::Index>(up)) += v * mode.eps(i);
        K.delta_a[i](static_cast<Eigen::Index>(up), static_cast<Eigen::Index>(lo)) +=
            std::conj(v) * mode.eps(i);
      }
    });
  }
  return K;
}

Vec3 expectation(const Vec3Op& K, const Vector& psi) {
  Vec3 out;
  for (int i = 0; i < 3; ++i) out(i) = psi.dot(K[i] * psi).real();
  return out;
}

double commutator_residual(const Vec3Op& K, const Matrix& H, const Vector& psi) {
  double sum = 0.0;
  double kscale = 0.0;
  const Vector Hpsi = H * psi;
  for (int i = 0; i < 3; ++i) {
    sum += (K[i] * Hpsi - H * (K[i] * psi)).squaredNorm();
    kscale = std::max(kscale, linalg::norm_scale(K[i]));
  }
  const double scale = linalg::norm_scale(H) * kscale;
  return scale > 0.0 ? std::sqrt(sum) / scale : 0.0;
}

Vector PerturbativeState::state(int order) const {
  Vector out = psi0;
  if (order >= 1) out += psi1;
  if (order >= 2) out += psi2;
  return out;
}

PerturbativeState perturbative_ground_state(
    const Eigen::VectorXd& unperturbed, const Matrix& coupling, std::size_t ground, int order,
    double degeneracy_tol, const std::function<std::string(std::size_t)>& labels) {
  const Eigen::Index n = unperturbed.size();
  const auto g = static_cast<Eigen::Index>(ground);
  if (coupling.rows() != n || coupling.cols() != n || g >= n) {
    throw std::invalid_argument("perturbative_ground_state: inconsistent dimensions");
  }
  if (order < 0 || order > 2) {
    throw std::invalid_argument("perturbative_ground_state: order must be 0, 1 or 2");
  }
  const double E0 = unperturbed(g);
  const double scale = unperturbed.cwiseAbs().maxCoeff();
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(n);  // 1 / (E_0 - E_n)
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i == g) continue;
    const double d = E0 - unperturbed(i);
    if (std::abs(d) <= degeneracy_tol * scale) {
      auto name = [&](Eigen::Index k) {
        return labels ? labels(static_cast<std::size_t>(k)) : "#" + std::to_string(k);
      };
      throw std::runtime_error("perturbative_ground_state: degenerate denominator between " +
                               name(g) + " and " + name(i));
    }
    inv(i) = 1.0 / d;
  }

  PerturbativeState s;
  s.psi0 = Vector::Zero(n);
  s.psi0(g) = 1.0;
  s.psi1 = Vector::Zero(n);
  s.psi2 = Vector::Zero(n);
  if (order == 0) return s;
  s.psi1 = coupling.col(g).cwiseProduct(inv.cast<std::complex<double>>());
  if (order == 1) return s;
  const std::complex<double> w00 = coupling(g, g);
  s.psi2 = (coupling * s.psi1 - w00 * s.psi1).cwiseProduct(inv.cast<std::complex<double>>());
  s.psi2(g) = -0.5 * s.psi1.squaredNorm();
  return s;
}

Vec3 perturbative_expectation(const Vec3Op& K, const PerturbativeState& st) {
  Vec3 out;
  for (int i = 0; i < 3; ++i) {
    const Vector K0 = K[i] * st.psi0;
    out(i) = st.psi0.dot(K0).real() + 2.0 * K0.dot(st.psi1).real() +
             2.0 * K0.dot(st.psi2).real() + st.psi1.dot(K[i] * st.psi1).real();
  }
  return out;
}

CompareReport compare_engines(const model::OscillatorSystem& sys, const model::FieldConfig& fields,
                              const Vec3& Q0, const DiscretizedModel& model, double coupling_scale,
                              const units::PhysicalConstants& kc) {
  const Hamiltonian h = build_hamiltonian(sys, fields, Q0, model, coupling_scale, kc);
  const Matrix H = h.full();
  const auto K = pseudo_momentum_operator(sys, fields, Q0, model, coupling_scale, false, kc)
                     .kinetic_form(true);

  CompareReport r;
  r.coupling_scale = coupling_scale;
  r.dimension = h.basis.size();

  const auto eig = exact_ground_state(H, 1e-13);
  r.ground_energy = eig.value;
  r.lanczos_residual = eig.residual;
  r.exact = expectation(K, eig.vector);
  r.commutator = commutator_residual(K, H, eig.vector);

  const auto st = perturbative_ground_state(
      h.unperturbed, h.coupling, h.ground, 2, 1e-12,
      [&](std::size_t i) { return h.basis[i].label(); });
  r.perturbative = perturbative_expectation(K, st);
  const Vector psi = st.state(2).normalized();
  r.overlap = std::abs(eig.vector.dot(psi));

  auto modes = model.modes;
  for (auto& m : modes) m.amplitude *= coupling_scale;
  r.discrete = engine::kperturb_discrete(sys, fields, Q0, modes, model.osc_nmax, kc).correction();

  r.difference = (r.exact - r.perturbative).norm();
  const double dn = r.discrete.norm();
  r.discrete_mismatch = dn > 0.0 ? (r.perturbative - r.discrete).norm() / dn
                                 : r.perturbative.norm();
  return r;
}

CouplingSweep coupling_sweep(const model::OscillatorSystem& sys, const model::FieldConfig& fields,
                             const Vec3& Q0, const DiscretizedModel& model,
                             const std::vector<double>& scales, const units::PhysicalConstants& kc) {
  if (scales.size() < 2) throw std::invalid_argument("coupling_sweep: need at least two scales");
  CouplingSweep out;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (double s : scales) {
    if (!(s > 0.0)) throw std::invalid_argument("coupling_sweep: scales must be > 0");
    out.points.push_back(compare_engines(sys, fields, Q0, model, s, kc));
    const auto& p = out.points.back();
    out.max_discrete_mismatch = std::max(out.max_discrete_mismatch, p.discrete_mismatch);
    const double x = std::log(s);
    const double y = std::log(std::max(p.difference, 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(scales.size());
  const double den = n * sxx - sx * sx;
  if (!(std::abs(den) > 0.0)) throw std::invalid_argument("coupling_sweep: scales must differ");
  out.slope = (n * sxy - sx * sy) / den;
  return out;
}

ToyProblem toy_problem(const units::PhysicalConstants& kc) {
  ToyProblem t{model::OscillatorSystem(3.0 * kc.m_electron, kc.m_electron, kc.e_charge,
                                       units::energy_to_angular_frequency(units::ev_to_joule(10.0, kc), kc)),
               {}, Vec3::Zero(), {}, 0.0};
  const double sigma = model::ground_state_width(t.sys, kc);
  const double alpha0 = model::static_polarizability(t.sys);
  t.fields.E0 = Vec3(0.3 * sigma * kc.e_charge / alpha0, 0.0, 0.0);
  t.fields.B0 = Vec3(0.0, 0.0, 0.3 * kc.hbar / (kc.e_charge * sigma * sigma));
  t.Q0 = model::classical_pseudo_momentum(t.sys, t.fields, Vec3::Zero());

  t.model.osc_nmax = 4;
  t.model.max_photons_per_mode = 1;
  const Vec3 dir1(0.36, 0.48, 0.8);
  const Vec3 dir2(-0.6, 0.0, 0.8);
  t.model.modes.push_back({(0.02 / sigma) * dir1, vacuum::polarization_basis(dir1)[0], 0.0});
  t.model.modes.push_back({(0.6 / sigma) * dir2, vacuum::polarization_basis(dir2)[1], 0.0});

  // Strongest coupling over gap at unit volume; A^2 scales as 1/V.
  const auto levels = osc::levels_per_axis(t.model.osc_nmax);
  const double hw = kc.hbar * t.sys.omega0();
  double ratio = 0.0;
  for (const auto& mode : t.model.modes) {
    const engine::OmegaContext ctx{t.sys, t.fields, t.Q0, mode.k, mode.eps};
    const double a = std::sqrt(vacuum::mode_amplitude_squared(mode.k.norm(), 1.0, kc));
    for (const auto& l : levels) {
      const double gap = hw * l.total() + kc.hbar * kc.c * mode.k.norm();
      const double g = kc.e_charge * a * std::abs(engine::omega_element(ctx, l, OscLevel(), kc));
      ratio = std::max(ratio, g / gap);
    }
  }
  t.volume = std::pow(ratio / 0.15, 2);
  for (auto& mode : t.model.modes) {
    mode.amplitude = std::sqrt(vacuum::mode_amplitude_squared(mode.k.norm(), t.volume, kc));
  }
  return t;
}

}  // namespace casimir::oracle
