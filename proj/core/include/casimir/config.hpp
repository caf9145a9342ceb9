#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/engine.hpp"
#include "casimir/system.hpp"

namespace casimir::config {

enum class Mode { ClosedForm, Numeric, Oracle, Scan, Sweep };

enum class SweepParam { B0, E0, Omega0, MassRatio };

std::string_view to_string(Mode m);
std::string_view to_string(SweepParam p);
Mode parse_mode(std::string_view s);
SweepParam parse_sweep_param(std::string_view s);

struct SweepSpec {
  SweepParam param = SweepParam::B0;
  double min = 0.0;
  double max = 0.0;
  int steps = 0;
};

/// One run. Units are in the key names of the text form.
struct RunConfig {
  std::string name = "custom";
  double m1_me = 0.0;           // in electron masses
  double m2_me = 0.0;
  double charge_e = 1.0;        // in elementary charges
  double hbar_omega0_eV = 10.0;
  Vec3 E0_Vpm = Vec3::Zero();
  Vec3 B0_T = Vec3::Zero();
  Vec3 v_mps = Vec3::Zero();    // kinetic velocity of the centre of mass
  double lambda_mec = 1e3;      // cutoff in m_e c / hbar
  std::vector<double> scan_lambdas_mec{1e2, 1e3, 1e4, 1e5};
  engine::EngineOptions engine;
  Mode mode = Mode::ClosedForm;
  SweepSpec sweep;
  int oracle_osc_nmax = 4;

  /// Throws std::invalid_argument on non-physical values or missing
  /// mode-specific fields.
  void validate() const;

  model::OscillatorSystem system(const units::PhysicalConstants& kc = units::codata2018()) const;
  model::FieldConfig fields() const;
  double lambda(const units::PhysicalConstants& kc = units::codata2018()) const;  // 1/m
};

/// Parses "key = value" lines; '#' starts a comment. Vector values are three
/// numbers separated by spaces or commas, lists any number of them. Unknown
/// keys, duplicates and malformed values throw std::invalid_argument with the
/// line number.
RunConfig parse(std::string_view text);
RunConfig load(const std::string& path);

/// Canonical text form: every key in a fixed order, numbers with 17
/// significant digits. parse(canonical(c)) reproduces c.
std::string canonical(const RunConfig& c);

/// FNV-1a 64 of canonical(c), as 16 hex digits.
std::string config_hash(const RunConfig& c);

/// Documented keys with units, one per line.
std::string key_reference();

/// "hydrogen": m_p, m_e, 10 eV, E0 = 1e5 V/m x-hat, B0 = 17 T z-hat.
/// "equal-mass": m_p, m_p, same fields. "positronium-like": m_e, m_e, 5 eV.
/// Throws std::invalid_argument on an unknown name.
RunConfig preset(std::string_view name);
std::vector<std::string> preset_names();

}  // namespace casimir::config
