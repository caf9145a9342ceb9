#include "casimir/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace casimir::report {

namespace {

using Json = nlohmann::ordered_json;

std::string num(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void dump(const Json& j, std::ostringstream& os, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string end_pad(static_cast<std::size_t>(2 * depth), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) os << ",\n";
      first = false;
      os << pad << Json(it.key()).dump() << ": ";
      dump(it.value(), os, depth + 1);
    }
    os << "\n" << end_pad << "}";
  } else if (j.is_array()) {
    if (j.empty()) {
      os << "[]";
      return;
    }
    const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
    if (flat) {
      os << "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ", ";
        dump(j[i], os, depth + 1);
      }
      os << "]";
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) os << ",\n";
      os << pad;
      dump(j[i], os, depth + 1);
    }
    os << "\n" << end_pad << "]";
  } else if (j.is_number_float()) {
    os << num(j.get<double>());
  } else {
    os << j.dump();
  }
}

std::string serialize(const Json& j) {
  std::ostringstream os;
  dump(j, os, 0);
  os << "\n";
  return os.str();
}

Json vec(const Vec3& v) { return Json::array({v(0), v(1), v(2)}); }

Json config_json(const config::RunConfig& c) {
  Json j;
  j["name"] = c.name;
  j["mode"] = std::string(config::to_string(c.mode));
  j["m1_me"] = c.m1_me;
  j["m2_me"] = c.m2_me;
  j["charge_e"] = c.charge_e;
  j["hbar_omega0_eV"] = c.hbar_omega0_eV;
  j["E0_Vpm"] = vec(c.E0_Vpm);
  j["B0_T"] = vec(c.B0_T);
  j["v_mps"] = vec(c.v_mps);
  j["lambda_mec"] = c.lambda_mec;
  j["scan_lambdas_mec"] = c.scan_lambdas_mec;
  j["n_max"] = c.engine.n_max;
  j["rel_tol"] = c.engine.rel_tol;
  j["keep_doppler"] = c.engine.keep_doppler;
  if (c.mode == config::Mode::Sweep) {
    j["sweep_param"] = std::string(config::to_string(c.sweep.param));
    j["sweep_min"] = c.sweep.min;
    j["sweep_max"] = c.sweep.max;
    j["sweep_steps"] = c.sweep.steps;
  }
  if (c.mode == config::Mode::Oracle) j["oracle_osc_nmax"] = c.oracle_osc_nmax;
  return j;
}

Json provenance(const config::RunConfig& c, const std::string& hash) {
  Json j;
  j["config_hash"] = hash;
  j["constants_version"] = "CODATA 2018";
  j["config"] = config_json(c);
  return j;
}

Json renorm_json(const renorm::RenormalizationReport& r) {
  Json j;
  j["lambda_per_m"] = r.lambda;
  j["delta_m1_kg"] = r.delta_m1;
  j["delta_m2_kg"] = r.delta_m2;
  j["delta_M_kg"] = r.delta_M;
  j["delta_inv_mu_per_kg"] = r.delta_inv_mu;
  j["mu_star_kg"] = r.mu_star;
  j["raw_exb"] = r.raw;
  j["counterterm_exb"] = r.counterterm;
  j["renormalized_exb"] = r.renormalized;
  return j;
}

Json record_json(const ResultRecord& r, bool with_provenance) {
  Json j;
  if (with_provenance) j["provenance"] = provenance(r.config, r.config_hash);
  j["total_mass_kg"] = r.total_mass;
  j["reference_direction"] = vec(r.reference);
  Json q = Json::array();
  for (const auto& x : r.quantities) {
    Json e;
    e["name"] = x.name;
    e["momentum_kg_m_per_s"] = vec(x.momentum);
    e["velocity_m_per_s"] = vec(x.velocity);
    e["along_reference_kg_m_per_s"] = x.along_reference;
    q.push_back(e);
  }
  j["momenta"] = q;
  Json ratios;
  ratios["classical_magnetoelectric_kg_m_per_s"] = r.classical_magnetoelectric;
  ratios["k1_over_classical"] = r.k1_ratio;
  ratios["k1_over_classical_percent"] = num(100.0 * r.k1_ratio) + " %";
  ratios["k2_over_classical"] = r.k2_ratio;
  ratios["k2_over_classical_percent"] = num(100.0 * r.k2_ratio) + " %";
  ratios["k2_bracket"] = r.k2_bracket;
  j["ratios"] = ratios;
  Json v;
  v["si_m_per_s"] = r.v_classical_si;
  v["gaussian_volume_m_per_s"] = r.v_classical_volume;
  j["classical_velocity_conventions"] = v;
  Json val;
  val["anisotropy_parameter"] = r.anisotropy;
  val["doppler_bound"] = r.doppler_bound;
  j["validity"] = val;
  if (r.breakdown.numeric) {
    Json n;
    n["lambda_per_m"] = r.breakdown.lambda;
    n["mass_like_along_q0"] = r.breakdown.mass_like_along_q0;
    n["raw_along_exb"] = r.breakdown.raw_along_exb;
    n["renormalized_along_exb"] = r.breakdown.renormalized_along_exb;
    n["p0_field_linear"] = vec(r.breakdown.p0_field_linear);
    n["cross_field_linear"] = vec(r.breakdown.cross_field_linear);
    j["numeric"] = n;
  }
  if (r.renormalization) j["renormalization"] = renorm_json(*r.renormalization);
  j["warnings"] = r.warnings;
  j["notes"] = r.notes;
  return j;
}

void add_quantity(ResultRecord& r, std::string name, const Vec3& p) {
  Quantity q;
  q.name = std::move(name);
  q.momentum = p;
  q.velocity = p / r.total_mass;
  q.along_reference = p.dot(r.reference);
  r.quantities.push_back(std::move(q));
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ",";
    out += cells[i];
  }
  return out + "\n";
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string fixed(double v, int digits = 6) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

}  // namespace

ResultRecord run(const config::RunConfig& cfg) {
  cfg.validate();
  const auto& kc = units::codata2018();
  const auto sys = cfg.system(kc);
  const auto fields = cfg.fields();
  const Vec3 Q0 = model::classical_pseudo_momentum(sys, fields, cfg.v_mps);

  ResultRecord r;
  r.config = cfg;
  r.config_hash = config::config_hash(cfg);
  r.total_mass = sys.total_mass();
  const Vec3 exb = fields.cross();
  if (exb.norm() > 0.0) r.reference = exb.normalized();

  if (cfg.mode == config::Mode::Numeric) {
    const vacuum::Cutoff cutoff(cfg.lambda(kc));
    r.breakdown = engine::vacuum_momentum_numeric(sys, fields, Q0, cutoff, cfg.engine, kc);
    auto rep = renorm::mass_report(sys, cutoff, kc);
    rep.raw = r.breakdown.raw_along_exb;
    rep.counterterm = r.breakdown.counterterm.dot(r.reference);
    rep.renormalized = r.breakdown.renormalized_along_exb;
    r.renormalization = rep;
    r.transverse = engine::transverse_momentum_term(sys, fields, Q0, cfg.engine, kc);
  } else {
    r.breakdown = engine::closed_form_breakdown(sys, fields, Q0, kc);
  }
  const auto& b = r.breakdown;
  add_quantity(r, "classical", b.classical);
  add_quantity(r, "casimir_k1", b.casimir_k1);
  add_quantity(r, "casimir_k2", b.casimir_k2);
  add_quantity(r, "casimir_total", b.casimir_k1 + b.casimir_k2);
  if (b.numeric) {
    add_quantity(r, "mass_like_raw", b.mass_like);
    add_quantity(r, "mass_like_renormalized", b.mass_like_renormalized);
    add_quantity(r, "field_linear_raw", b.raw_field_linear);
    add_quantity(r, "counterterm", b.counterterm);
    add_quantity(r, "field_linear_renormalized", b.renormalized_field_linear);
    add_quantity(r, "dipole_qed", b.dipole_qed);
    if (r.transverse) add_quantity(r, "transverse", *r.transverse);
  }

  const double alpha0 = model::static_polarizability(sys);
  r.classical_magnetoelectric = -alpha0 * exb.dot(r.reference);
  if (r.classical_magnetoelectric != 0.0) {
    r.k1_ratio = b.casimir_k1.dot(r.reference) / r.classical_magnetoelectric + 0.0;
    r.k2_ratio = b.casimir_k2.dot(r.reference) / r.classical_magnetoelectric + 0.0;
  }
  r.k2_bracket = engine::casimir_k2_bracket(sys);

  const auto audit =
      units::audit_momentum_conventions(alpha0, cfg.E0_Vpm.norm(), cfg.B0_T.norm(), kc);
  r.v_classical_si = audit.p_si / r.total_mass;
  r.v_classical_volume = audit.p_volume / r.total_mass;

  r.anisotropy = model::anisotropy_parameter(sys, fields, kc);
  r.doppler_bound = b.doppler_bound;
  if (r.anisotropy > kAnisotropyWarn) {
    r.warnings.push_back("anisotropy parameter " + fixed(r.anisotropy, 3) + " exceeds " +
                         fixed(kAnisotropyWarn, 3) + "; field-free oscillator states assumed");
  }
  if (r.doppler_bound > kDopplerWarn) {
    r.warnings.push_back("Doppler bound " + fixed(r.doppler_bound, 3) + " exceeds " +
                         fixed(kDopplerWarn, 3) + "; recoil denominators neglected");
  }

  r.notes.push_back(std::string(audit.note));
  r.notes.push_back("ratios are taken against the magneto-electric classical momentum "
                    "-alpha(0) E0 x B0 projected on (E0 x B0)-hat");
  if (cfg.name == "hydrogen") {
    r.notes.push_back("often quoted hydrogen estimate v_cl ~ 5 um/s is not reproduced: SI reading "
                      "gives " + fixed(r.v_classical_si * 1e6, 3) + " um/s, Gaussian-volume reading "
                      "gives " + fixed(r.v_classical_volume * 1e6, 3) + " um/s");
    r.notes.push_back("often quoted K2 size of 0.01% of the classical momentum is not reproduced: "
                      "the closed form gives K2/classical = " + fixed(r.k2_ratio, 3));
  }
  if (b.numeric) {
    r.notes.push_back("numeric cross-particle field-linear part is reported alongside the closed "
                      "form K2 and is not used for it");
  }
  return r;
}

ResultRecord run_preset(std::string_view name) { return run(config::preset(name)); }

ScanRecord run_scan(const config::RunConfig& cfg) {
  if (cfg.scan_lambdas_mec.size() < 3) {
    throw std::invalid_argument("run_scan: at least 3 cutoffs are required");
  }
  cfg.validate();
  const auto& kc = units::codata2018();
  const auto sys = cfg.system(kc);
  const auto fields = cfg.fields();
  const Vec3 Q0 = model::classical_pseudo_momentum(sys, fields, cfg.v_mps);
  std::vector<double> lambdas;
  for (double l : cfg.scan_lambdas_mec) lambdas.push_back(l * kc.m_electron * kc.c / kc.hbar);
  ScanRecord r{cfg, config::config_hash(cfg), {}};
  r.scan = renorm::cutoff_independence_scan(sys, fields, Q0, lambdas, cfg.engine, kc);
  return r;
}

config::RunConfig sweep_point(const config::RunConfig& cfg, double value) {
  config::RunConfig c = cfg;
  c.mode = config::Mode::ClosedForm;
  switch (cfg.sweep.param) {
    case config::SweepParam::B0: {
      const Vec3 dir = cfg.B0_T.norm() > 0.0 ? Vec3(cfg.B0_T.normalized()) : Vec3::UnitZ();
      c.B0_T = value * dir;
      break;
    }
    case config::SweepParam::E0: {
      const Vec3 dir = cfg.E0_Vpm.norm() > 0.0 ? Vec3(cfg.E0_Vpm.normalized()) : Vec3::UnitX();
      c.E0_Vpm = value * dir;
      break;
    }
    case config::SweepParam::Omega0:
      c.hbar_omega0_eV = value;
      break;
    case config::SweepParam::MassRatio:
      c.m1_me = value * cfg.m2_me;
      break;
  }
  return c;
}

SweepRecord run_sweep(const config::RunConfig& cfg) {
  if (cfg.sweep.steps < 2) throw std::invalid_argument("run_sweep: steps must be >= 2");
  cfg.validate();
  SweepRecord out{cfg, config::config_hash(cfg), {}};
  std::vector<double> values;
  for (int i = 0; i < cfg.sweep.steps; ++i) {
    values.push_back(cfg.sweep.min +
                     (cfg.sweep.max - cfg.sweep.min) * i / static_cast<double>(cfg.sweep.steps - 1));
  }
  std::vector<std::future<ResultRecord>> jobs;
  for (double v : values) {
    jobs.push_back(std::async(std::launch::async, [&cfg, v] { return run(sweep_point(cfg, v)); }));
  }
  // Project every row on the base config's direction so signed columns stay linear.
  const Vec3 exb = cfg.fields().cross();
  const Vec3 alt = sweep_point(cfg, 1.0).fields().cross();
  const Vec3 u = exb.norm() > 0.0   ? Vec3(exb.normalized())
                 : alt.norm() > 0.0 ? Vec3(alt.normalized())
                                    : Vec3::Zero();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    SweepRow row{values[i], jobs[i].get()};
    row.record.reference = u;
    for (auto& q : row.record.quantities) q.along_reference = q.momentum.dot(u);
    out.rows.push_back(std::move(row));
  }
  return out;
}

OracleRecord run_oracle(const config::RunConfig& cfg) {
  cfg.validate();
  auto toy = oracle::toy_problem();
  toy.model.osc_nmax = cfg.oracle_osc_nmax;
  OracleRecord r{cfg, config::config_hash(cfg), toy.volume, toy.model.dimension(), {}};
  r.sweep = oracle::coupling_sweep(toy.sys, toy.fields, toy.Q0, toy.model);
  return r;
}

std::string to_json(const ResultRecord& r) { return serialize(record_json(r, true)); }

std::string to_json(const ScanRecord& r) {
  Json j;
  j["provenance"] = provenance(r.config, r.config_hash);
  Json pts = Json::array();
  for (const auto& p : r.scan.points) pts.push_back(renorm_json(p));
  j["points"] = pts;
  j["residual_slope"] = r.scan.residual_slope;
  j["raw_slope"] = r.scan.raw_slope;
  j["expected_raw_slope"] = r.scan.expected_raw_slope;
  j["closed_form_k1_exb"] = r.scan.closed_form_k1;
  return serialize(j);
}

std::string to_json(const SweepRecord& r) {
  Json j;
  j["provenance"] = provenance(r.config, r.config_hash);
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json e;
    e["value"] = row.value;
    e["config_hash"] = row.record.config_hash;
    e["record"] = record_json(row.record, false);
    rows.push_back(e);
  }
  j["rows"] = rows;
  return serialize(j);
}

std::string to_json(const OracleRecord& r) {
  Json j;
  j["provenance"] = provenance(r.config, r.config_hash);
  j["volume_m3"] = r.volume;
  j["dimension"] = r.dimension;
  j["slope"] = r.sweep.slope;
  j["max_discrete_mismatch"] = r.sweep.max_discrete_mismatch;
  Json pts = Json::array();
  for (const auto& p : r.sweep.points) {
    Json e;
    e["coupling_scale"] = p.coupling_scale;
    e["exact"] = vec(p.exact);
    e["perturbative"] = vec(p.perturbative);
    e["discrete"] = vec(p.discrete);
    e["difference"] = p.difference;
    e["discrete_mismatch"] = p.discrete_mismatch;
    e["ground_energy_J"] = p.ground_energy;
    e["lanczos_residual_J"] = p.lanczos_residual;
    e["overlap"] = p.overlap;
    e["commutator"] = p.commutator;
    pts.push_back(e);
  }
  j["points"] = pts;
  return serialize(j);
}

std::string to_csv(const ResultRecord& r) {
  std::string out = csv_row({"config_hash", "quantity", "px", "py", "pz", "p_ref", "vx", "vy", "vz"});
  for (const auto& q : r.quantities) {
    out += csv_row({r.config_hash, q.name, num(q.momentum(0)), num(q.momentum(1)),
                    num(q.momentum(2)), num(q.along_reference), num(q.velocity(0)),
                    num(q.velocity(1)), num(q.velocity(2))});
  }
  return out;
}

std::string to_csv(const ScanRecord& r) {
  std::string out = csv_row({"config_hash", "lambda", "raw", "counterterm", "renormalized", "slope"});
  for (const auto& p : r.scan.points) {
    out += csv_row({r.config_hash, num(p.lambda), num(p.raw), num(p.counterterm),
                    num(p.renormalized), num(r.scan.residual_slope)});
  }
  return out;
}

std::string to_csv(const SweepRecord& r) {
  std::string out = csv_row({"config_hash", "param", "value", "classical", "k1", "k2", "k1_ratio",
                             "k2_ratio", "v_classical", "anisotropy", "doppler", "warnings"});
  const std::string param(config::to_string(r.config.sweep.param));
  for (const auto& row : r.rows) {
    const auto& rec = row.record;
    auto along = [&](const char* name) {
      for (const auto& q : rec.quantities) {
        if (q.name == name) return q.along_reference;
      }
      return 0.0;
    };
    out += csv_row({r.config_hash, param, num(row.value), num(along("classical")),
                    num(along("casimir_k1")), num(along("casimir_k2")), num(rec.k1_ratio),
                    num(rec.k2_ratio), num(along("classical") / rec.total_mass),
                    num(rec.anisotropy), num(rec.doppler_bound),
                    "\"" + join(rec.warnings, "; ") + "\""});
  }
  return out;
}

std::string to_csv(const OracleRecord& r) {
  std::string out = csv_row({"config_hash", "coupling_scale", "exact_x", "exact_y", "exact_z",
                             "perturbative_x", "perturbative_y", "perturbative_z", "discrete_x",
                             "discrete_y", "discrete_z", "difference", "discrete_mismatch",
                             "overlap", "commutator"});
  for (const auto& p : r.sweep.points) {
    out += csv_row({r.config_hash, num(p.coupling_scale), num(p.exact(0)), num(p.exact(1)),
                    num(p.exact(2)), num(p.perturbative(0)), num(p.perturbative(1)),
                    num(p.perturbative(2)), num(p.discrete(0)), num(p.discrete(1)),
                    num(p.discrete(2)), num(p.difference), num(p.discrete_mismatch),
                    num(p.overlap), num(p.commutator)});
  }
  return out;
}

std::string schema(config::Mode mode) {
  std::string s =
      "results.json: nested record; every number has 17 significant digits.\n"
      "provenance.config_hash: FNV-1a 64 of the canonical config text.\n"
      "provenance.constants_version: physical constants set.\n\n"
      "results.csv columns:\n"
      "config_hash: as above, on every row.\n";
  switch (mode) {
    case config::Mode::ClosedForm:
    case config::Mode::Numeric:
      s += "quantity: momentum name (classical, casimir_k1, casimir_k2, casimir_total; numeric mode "
           "adds mass_like_raw, mass_like_renormalized, field_linear_raw, counterterm, "
           "field_linear_renormalized, dipole_qed, transverse).\n"
           "px, py, pz: momentum components, kg m/s.\n"
           "p_ref: momentum along (E0 x B0)-hat, kg m/s.\n"
           "vx, vy, vz: momentum / total mass, m/s.\n";
      break;
    case config::Mode::Scan:
      s += "lambda: UV cutoff, 1/m.\n"
           "raw: field-linear vacuum momentum along (E0 x B0)-hat before subtraction, kg m/s.\n"
           "counterterm: mass-counterterm momentum along (E0 x B0)-hat, kg m/s.\n"
           "renormalized: raw - counterterm, kg m/s.\n"
           "slope: fitted d ln|renormalized| / d ln lambda over the scan (same on every row).\n";
      break;
    case config::Mode::Sweep:
      s += "param: swept parameter (B0 in T, E0 in V/m, omega0 as hbar omega0 in eV, mass_ratio "
           "m1/m2).\n"
           "value: parameter value.\n"
           "classical, k1, k2: classical momentum and the two Casimir terms along the base "
           "config's (E0 x B0)-hat, kg m/s.\n"
           "k1_ratio, k2_ratio: K1 and K2 over -alpha(0) E0 x B0 along the same direction.\n"
           "v_classical: classical / total mass, m/s.\n"
           "anisotropy: e |B0| sigma^2 / hbar.\n"
           "doppler: hbar omega0 / (M c^2).\n"
           "warnings: validity thresholds exceeded (anisotropy > 1e-3, Doppler > 1e-6).\n";
      break;
    case config::Mode::Oracle:
      s += "coupling_scale: factor s on every mode amplitude.\n"
           "exact_*: <K> - Q0 in the exact ground state, kg m/s.\n"
           "perturbative_*: second-order <K> - Q0, kg m/s.\n"
           "discrete_*: discrete-mode Kperturb correction, kg m/s.\n"
           "difference: |exact - perturbative|, kg m/s.\n"
           "discrete_mismatch: |perturbative - discrete| / |discrete|.\n"
           "overlap: |<exact|perturbative>| with the perturbative state normalized.\n"
           "commutator: ||[K, H] psi|| / (||H|| ||K||), truncation diagnostic.\n";
      break;
  }
  return s;
}

std::string summary(const ResultRecord& r) {
  std::ostringstream os;
  os << "run " << r.config.name << " (" << config::to_string(r.config.mode) << ", hash "
     << r.config_hash << ")\n";
  char line[160];
  std::snprintf(line, sizeof line, "  %-26s %24s %24s\n", "quantity", "p . u [kg m/s]", "|v| [m/s]");
  os << line;
  for (const auto& q : r.quantities) {
    std::snprintf(line, sizeof line, "  %-26s %24.12g %24.12g\n", q.name.c_str(), q.along_reference,
                  q.velocity.norm());
    os << line;
  }
  os << "  K1 / classical          " << fixed(r.k1_ratio, 8) << " (" << fixed(100 * r.k1_ratio, 6)
     << " %)\n";
  os << "  K2 / classical          " << fixed(r.k2_ratio, 8) << " (" << fixed(100 * r.k2_ratio, 6)
     << " %)\n";
  os << "  K2 bracket              " << fixed(r.k2_bracket, 12) << "\n";
  os << "  v_cl SI                 " << fixed(r.v_classical_si * 1e6, 6) << " um/s\n";
  os << "  v_cl Gaussian-volume    " << fixed(r.v_classical_volume * 1e6, 6) << " um/s\n";
  for (const auto& w : r.warnings) os << "  warning: " << w << "\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  return os.str();
}

std::string summary(const ScanRecord& r) {
  std::ostringstream os;
  os << "scan " << r.config.name << " (hash " << r.config_hash << ")\n";
  char line[160];
  std::snprintf(line, sizeof line, "  %14s %22s %22s %22s\n", "lambda [1/m]", "raw", "counterterm",
                "renormalized");
  os << line;
  for (const auto& p : r.scan.points) {
    std::snprintf(line, sizeof line, "  %14.6g %22.12g %22.12g %22.12g\n", p.lambda, p.raw,
                  p.counterterm, p.renormalized);
    os << line;
  }
  os << "  residual slope d ln|K|/d ln Lambda = " << fixed(r.scan.residual_slope, 6) << "\n";
  os << "  raw slope / expected = " << fixed(r.scan.raw_slope / r.scan.expected_raw_slope, 8) << "\n";
  os << "  closed-form K1 = " << fixed(r.scan.closed_form_k1, 12) << "\n";
  return os.str();
}

std::string summary(const SweepRecord& r) {
  std::ostringstream os;
  os << "sweep " << config::to_string(r.config.sweep.param) << " (hash " << r.config_hash << ")\n";
  char line[200];
  std::snprintf(line, sizeof line, "  %14s %22s %22s %14s %s\n", "value", "classical", "K1",
                "K1/classical", "warnings");
  os << line;
  for (const auto& row : r.rows) {
    std::snprintf(line, sizeof line, "  %14.6g %22.12g %22.12g %14.8g %zu\n", row.value,
                  row.record.quantities[0].along_reference, row.record.quantities[1].along_reference,
                  row.record.k1_ratio, row.record.warnings.size());
    os << line;
  }
  return os.str();
}

std::string summary(const OracleRecord& r) {
  std::ostringstream os;
  os << "oracle toy model (dimension " << r.dimension << ", hash " << r.config_hash << ")\n";
  char line[200];
  std::snprintf(line, sizeof line, "  %8s %16s %16s %12s %10s\n", "s", "|exact-pert|",
                "|pert-disc|rel", "overlap", "commutator");
  os << line;
  for (const auto& p : r.sweep.points) {
    std::snprintf(line, sizeof line, "  %8.4g %16.6g %16.6g %12.10f %10.4g\n", p.coupling_scale,
                  p.difference, p.discrete_mismatch, p.overlap, p.commutator);
    os << line;
  }
  os << "  log-log slope " << fixed(r.sweep.slope, 6) << ", max discrete mismatch "
     << fixed(r.sweep.max_discrete_mismatch, 3) << "\n";
  return os.str();
}

}  // namespace casimir::report
