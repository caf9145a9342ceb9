#pragma once

#include <optional>
#include <string>
#include <vector>

#include "casimir/config.hpp"
#include "casimir/engine.hpp"
#include "casimir/fock_oracle.hpp"
#include "casimir/renormalization.hpp"

namespace casimir::report {

/// A named momentum and its velocity p / M.
struct Quantity {
  std::string name;
  Vec3 momentum = Vec3::Zero();  // kg m/s
  Vec3 velocity = Vec3::Zero();  // m/s
  double along_reference = 0.0;  // momentum . u, kg m/s
};

struct ResultRecord {
  config::RunConfig config;
  std::string config_hash;
  std::string constants_version = "CODATA 2018";

  double total_mass = 0.0;  // kg
  Vec3 reference = Vec3::Zero();  // u = (E0 x B0)-hat of the config, zero if undefined
  engine::MomentumBreakdown breakdown;
  std::vector<Quantity> quantities;

  // Ratios to the magneto-electric part of the classical momentum,
  // -alpha(0) E0 x B0, projected on u. Zero when E0 x B0 = 0.
  double classical_magnetoelectric = 0.0;  // kg m/s along u
  double k1_ratio = 0.0;
  double k2_ratio = 0.0;
  double k2_bracket = 0.0;

  // Classical velocity alpha(0) |E0| |B0| / M under both polarizability readings.
  double v_classical_si = 0.0;      // m/s
  double v_classical_volume = 0.0;  // m/s, Gaussian form with SI numbers

  double anisotropy = 0.0;
  double doppler_bound = 0.0;
  std::optional<renorm::RenormalizationReport> renormalization;  // numeric mode
  std::optional<Vec3> transverse;                                // numeric mode

  std::vector<std::string> warnings;
  std::vector<std::string> notes;
};

struct ScanRecord {
  config::RunConfig config;
  std::string config_hash;
  renorm::ScanResult scan;
};

struct SweepRow {
  double value = 0.0;  // swept parameter, unit of sweep_param
  ResultRecord record;
};

struct SweepRecord {
  config::RunConfig config;
  std::string config_hash;
  std::vector<SweepRow> rows;
};

struct OracleRecord {
  config::RunConfig config;
  std::string config_hash;
  double volume = 0.0;  // m^3
  std::size_t dimension = 0;
  oracle::CouplingSweep sweep;
};

/// Validity thresholds that annotate (never abort) a record.
inline constexpr double kAnisotropyWarn = 1e-3;
inline constexpr double kDopplerWarn = 1e-6;

/// Closed-form or numeric record, depending on config.mode.
ResultRecord run(const config::RunConfig& cfg);
ResultRecord run_preset(std::string_view name);
/// Throws std::invalid_argument with fewer than three cutoffs.
ScanRecord run_scan(const config::RunConfig& cfg);
/// Points are evaluated concurrently and returned in parameter order.
SweepRecord run_sweep(const config::RunConfig& cfg);
OracleRecord run_oracle(const config::RunConfig& cfg);

/// The config with the swept parameter set to value.
config::RunConfig sweep_point(const config::RunConfig& cfg, double value);

// Serialization. Numbers are written with 17 significant digits; no
// wall-clock time enters any payload.
std::string to_json(const ResultRecord& r);
std::string to_json(const ScanRecord& r);
std::string to_json(const SweepRecord& r);
std::string to_json(const OracleRecord& r);
std::string to_csv(const ResultRecord& r);
std::string to_csv(const ScanRecord& r);
std::string to_csv(const SweepRecord& r);
std::string to_csv(const OracleRecord& r);
std::string schema(config::Mode mode);

/// Human-readable summary table.
std::string summary(const ResultRecord& r);
std::string summary(const ScanRecord& r);
std::string summary(const SweepRecord& r);
std::string summary(const OracleRecord& r);

}  // namespace casimir::report
