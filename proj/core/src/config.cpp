#include "casimir/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace casimir::config {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> numbers(const std::string& value) {
  std::vector<double> out;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    double v = 0.0;
    const auto* end = tok.data() + tok.size();
    const auto [p, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc() || p != end) throw std::invalid_argument("not a number: '" + tok + "'");
    out.push_back(v);
    tok.clear();
  };
  for (char ch : value) {
    if (ch == ' ' || ch == '\t' || ch == ',') {
      flush();
    } else {
      tok.push_back(ch);
    }
  }
  flush();
  return out;
}

double scalar(const std::string& value) {
  const auto v = numbers(value);
  if (v.size() != 1) throw std::invalid_argument("expected one number, got '" + value + "'");
  return v[0];
}

int integer(const std::string& value) {
  const double v = scalar(value);
  if (v != std::floor(v) || std::abs(v) > 1e9) {
    throw std::invalid_argument("expected an integer, got '" + value + "'");
  }
  return static_cast<int>(v);
}

Vec3 vector3(const std::string& value) {
  const auto v = numbers(value);
  if (v.size() != 3) throw std::invalid_argument("expected three numbers, got '" + value + "'");
  return {v[0], v[1], v[2]};
}

bool boolean(const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw std::invalid_argument("expected true or false, got '" + value + "'");
}

std::string vec_text(const Vec3& v) { return fmt(v(0)) + " " + fmt(v(1)) + " " + fmt(v(2)); }

struct Key {
  const char* name;
  const char* doc;
};

// Canonical order.
constexpr Key kKeys[] = {
    {"name", "run label (text)"},
    {"mode", "closed-form | numeric | oracle | scan | sweep"},
    {"m1_me", "mass of particle 1 in electron masses"},
    {"m2_me", "mass of particle 2 in electron masses"},
    {"charge_e", "charge magnitude in elementary charges"},
    {"hbar_omega0_eV", "oscillator quantum in eV"},
    {"E0_Vpm", "static electric field, three components, V/m"},
    {"B0_T", "static magnetic field, three components, T"},
    {"v_mps", "centre-of-mass kinetic velocity, three components, m/s"},
    {"lambda_mec", "UV cutoff in units of m_e c / hbar"},
    {"scan_lambdas_mec", "cutoff list for scan mode, units of m_e c / hbar"},
    {"n_max", "angular order of the mode sum (>= 4)"},
    {"rel_tol", "radial quadrature relative tolerance"},
    {"keep_doppler", "true | false"},
    {"sweep_param", "B0 | E0 | omega0 | mass_ratio"},
    {"sweep_min", "sweep start (T, V/m, eV or m1/m2)"},
    {"sweep_max", "sweep end"},
    {"sweep_steps", "number of sweep points (>= 2)"},
    {"oracle_osc_nmax", "per-axis oscillator truncation of the oracle toy model"},
};

bool known_key(const std::string& k) {
  return std::any_of(std::begin(kKeys), std::end(kKeys),
                     [&](const Key& key) { return k == key.name; });
}

void assign(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "name") {
    if (value.empty()) throw std::invalid_argument("empty name");
    c.name = value;
  } else if (key == "mode") {
    c.mode = parse_mode(value);
  } else if (key == "m1_me") {
    c.m1_me = scalar(value);
  } else if (key == "m2_me") {
    c.m2_me = scalar(value);
  } else if (key == "charge_e") {
    c.charge_e = scalar(value);
  } else if (key == "hbar_omega0_eV") {
    c.hbar_omega0_eV = scalar(value);
  } else if (key == "E0_Vpm") {
    c.E0_Vpm = vector3(value);
  } else if (key == "B0_T") {
    c.B0_T = vector3(value);
  } else if (key == "v_mps") {
    c.v_mps = vector3(value);
  } else if (key == "lambda_mec") {
    c.lambda_mec = scalar(value);
  } else if (key == "scan_lambdas_mec") {
    c.scan_lambdas_mec = numbers(value);
  } else if (key == "n_max") {
    c.engine.n_max = integer(value);
  } else if (key == "rel_tol") {
    c.engine.rel_tol = scalar(value);
  } else if (key == "keep_doppler") {
    c.engine.keep_doppler = boolean(value);
  } else if (key == "sweep_param") {
    c.sweep.param = parse_sweep_param(value);
  } else if (key == "sweep_min") {
    c.sweep.min = scalar(value);
  } else if (key == "sweep_max") {
    c.sweep.max = scalar(value);
  } else if (key == "sweep_steps") {
    c.sweep.steps = integer(value);
  } else if (key == "oracle_osc_nmax") {
    c.oracle_osc_nmax = integer(value);
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("RunConfig: " + what);
}

bool finite(const Vec3& v) { return v.allFinite(); }

}  // namespace

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::ClosedForm: return "closed-form";
    case Mode::Numeric: return "numeric";
    case Mode::Oracle: return "oracle";
    case Mode::Scan: return "scan";
    case Mode::Sweep: return "sweep";
  }
  return "?";
}

std::string_view to_string(SweepParam p) {
  switch (p) {
    case SweepParam::B0: return "B0";
    case SweepParam::E0: return "E0";
    case SweepParam::Omega0: return "omega0";
    case SweepParam::MassRatio: return "mass_ratio";
  }
  return "?";
}

Mode parse_mode(std::string_view s) {
  for (Mode m : {Mode::ClosedForm, Mode::Numeric, Mode::Oracle, Mode::Scan, Mode::Sweep}) {
    if (s == to_string(m)) return m;
  }
  throw std::invalid_argument("unknown mode '" + std::string(s) + "'");
}

SweepParam parse_sweep_param(std::string_view s) {
  for (SweepParam p : {SweepParam::B0, SweepParam::E0, SweepParam::Omega0, SweepParam::MassRatio}) {
    if (s == to_string(p)) return p;
  }
  throw std::invalid_argument("unknown sweep parameter '" + std::string(s) + "'");
}

void RunConfig::validate() const {
  if (mode == Mode::Oracle) {
    require(oracle_osc_nmax >= 1 && oracle_osc_nmax <= 6, "oracle_osc_nmax must be in [1, 6]");
    return;  // the oracle runs its own toy model
  }
  require(std::isfinite(m1_me) && m1_me > 0.0, "m1_me must be > 0");
  require(std::isfinite(m2_me) && m2_me > 0.0, "m2_me must be > 0");
  require(std::isfinite(charge_e) && charge_e > 0.0, "charge_e must be > 0");
  require(std::isfinite(hbar_omega0_eV) && hbar_omega0_eV > 0.0, "hbar_omega0_eV must be > 0");
  require(finite(E0_Vpm) && finite(B0_T) && finite(v_mps), "field and velocity components must be finite");
  require(std::isfinite(lambda_mec) && lambda_mec > 0.0, "lambda_mec must be > 0");
  require(engine.n_max >= 4, "n_max must be >= 4");
  require(engine.rel_tol > 0.0 && engine.rel_tol < 1e-2, "rel_tol must be in (0, 1e-2)");
  if (mode == Mode::Scan) {
    require(scan_lambdas_mec.size() >= 3, "scan needs at least 3 cutoffs");
    for (double l : scan_lambdas_mec) require(std::isfinite(l) && l > 0.0, "cutoffs must be > 0");
  }
  if (mode == Mode::Sweep) {
    require(sweep.steps >= 2, "sweep_steps must be >= 2");
    require(std::isfinite(sweep.min) && std::isfinite(sweep.max) && sweep.min != sweep.max,
            "sweep range must be finite and non-empty");
    if (sweep.param != SweepParam::B0 && sweep.param != SweepParam::E0) {
      require(sweep.min > 0.0 && sweep.max > 0.0, "omega0 and mass_ratio sweeps need positive bounds");
    }
  }
}

model::OscillatorSystem RunConfig::system(const units::PhysicalConstants& kc) const {
  return model::OscillatorSystem(
      m1_me * kc.m_electron, m2_me * kc.m_electron, charge_e * kc.e_charge,
      units::energy_to_angular_frequency(units::ev_to_joule(hbar_omega0_eV, kc), kc));
}

model::FieldConfig RunConfig::fields() const { return {E0_Vpm, B0_T}; }

double RunConfig::lambda(const units::PhysicalConstants& kc) const {
  return lambda_mec * kc.m_electron * kc.c / kc.hbar;
}

RunConfig parse(std::string_view text) {
  RunConfig c;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (eq == std::string::npos) throw std::invalid_argument(where + "expected key = value");
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (!known_key(key)) throw std::invalid_argument(where + "unknown key '" + key + "'");
    if (!seen.insert(key).second) throw std::invalid_argument(where + "duplicate key '" + key + "'");
    try {
      assign(c, key, value);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + key + ": " + e.what());
    }
  }
  c.validate();
  return c;
}

RunConfig load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

std::string canonical(const RunConfig& c) {
  std::map<std::string, std::string> v;
  v["name"] = c.name;
  v["mode"] = std::string(to_string(c.mode));
  v["m1_me"] = fmt(c.m1_me);
  v["m2_me"] = fmt(c.m2_me);
  v["charge_e"] = fmt(c.charge_e);
  v["hbar_omega0_eV"] = fmt(c.hbar_omega0_eV);
  v["E0_Vpm"] = vec_text(c.E0_Vpm);
  v["B0_T"] = vec_text(c.B0_T);
  v["v_mps"] = vec_text(c.v_mps);
  v["lambda_mec"] = fmt(c.lambda_mec);
  std::string lambdas;
  for (double l : c.scan_lambdas_mec) lambdas += (lambdas.empty() ? "" : " ") + fmt(l);
  v["scan_lambdas_mec"] = lambdas;
  v["n_max"] = std::to_string(c.engine.n_max);
  v["rel_tol"] = fmt(c.engine.rel_tol);
  v["keep_doppler"] = c.engine.keep_doppler ? "true" : "false";
  v["sweep_param"] = std::string(to_string(c.sweep.param));
  v["sweep_min"] = fmt(c.sweep.min);
  v["sweep_max"] = fmt(c.sweep.max);
  v["sweep_steps"] = std::to_string(c.sweep.steps);
  v["oracle_osc_nmax"] = std::to_string(c.oracle_osc_nmax);
  std::string out;
  for (const auto& k : kKeys) out += std::string(k.name) + " = " + v[k.name] + "\n";
  return out;
}

std::string config_hash(const RunConfig& c) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : canonical(c)) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string key_reference() {
  std::string out;
  for (const auto& k : kKeys) out += std::string(k.name) + ": " + k.doc + "\n";
  return out;
}

RunConfig preset(std::string_view name) {
  const auto& kc = units::codata2018();
  RunConfig c;
  c.E0_Vpm = Vec3(1e5, 0.0, 0.0);
  c.B0_T = Vec3(0.0, 0.0, 17.0);
  c.hbar_omega0_eV = 10.0;
  if (name == "hydrogen") {
    c.m1_me = kc.m_proton / kc.m_electron;
    c.m2_me = 1.0;
  } else if (name == "equal-mass") {
    c.m1_me = kc.m_proton / kc.m_electron;
    c.m2_me = c.m1_me;
  } else if (name == "positronium-like") {
    c.m1_me = 1.0;
    c.m2_me = 1.0;
    c.hbar_omega0_eV = 5.0;
  } else {
    throw std::invalid_argument("unknown preset '" + std::string(name) +
                                "' (hydrogen, equal-mass, positronium-like)");
  }
  c.name = std::string(name);
  c.validate();
  return c;
}

std::vector<std::string> preset_names() { return {"hydrogen", "equal-mass", "positronium-like"}; }

}  // namespace casimir::config
