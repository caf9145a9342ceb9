#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "casimir/config.hpp"
#include "casimir/report.hpp"

namespace {

namespace fs = std::filesystem;
using casimir::config::Mode;

struct Output {
  std::string dir = ".";
  std::string format;  // empty: both
  std::optional<double> tol;
  bool quiet = false;
};

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

template <class Record>
void emit(const Record& r, Mode mode, const Output& out) {
  fs::create_directories(out.dir);
  const fs::path dir(out.dir);
  if (out.format.empty() || out.format == "json") {
    write_file(dir / "results.json", casimir::report::to_json(r));
  }
  if (out.format.empty() || out.format == "csv") {
    write_file(dir / "results.csv", casimir::report::to_csv(r));
  }
  write_file(dir / "schema.txt", casimir::report::schema(mode));
  if (!out.quiet) std::cout << casimir::report::summary(r);
}

void apply(casimir::config::RunConfig& cfg, const Output& out) {
  if (out.tol) cfg.engine.rel_tol = *out.tol;
  cfg.validate();
}

void dispatch(casimir::config::RunConfig cfg, const Output& out) {
  apply(cfg, out);
  switch (cfg.mode) {
    case Mode::ClosedForm:
    case Mode::Numeric:
      emit(casimir::report::run(cfg), cfg.mode, out);
      break;
    case Mode::Scan:
      emit(casimir::report::run_scan(cfg), cfg.mode, out);
      break;
    case Mode::Sweep:
      emit(casimir::report::run_sweep(cfg), cfg.mode, out);
      break;
    case Mode::Oracle:
      emit(casimir::report::run_oracle(cfg), cfg.mode, out);
      break;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classical and vacuum pseudo-momentum of a charged oscillator in crossed fields"};
  app.require_subcommand(1);
  app.fallthrough();

  Output out;
  app.add_option("--out", out.dir, "Output directory")->capture_default_str();
  app.add_option("--format", out.format, "Machine-readable output (default: both)")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--tol", out.tol, "Radial quadrature relative tolerance")
      ->check(CLI::Range(1e-15, 1e-2));
  app.add_flag("--quiet", out.quiet, "Suppress the summary table");

  std::string preset_name;
  auto* preset = app.add_subcommand("preset", "Run a named preset");
  preset->add_option("name", preset_name, "hydrogen | equal-mass | positronium-like")->required();

  std::string run_path;
  auto* run = app.add_subcommand("run", "Run a config file in its own mode");
  run->add_option("config", run_path, "Config file")->required()->check(CLI::ExistingFile);

  std::string scan_path;
  auto* scan = app.add_subcommand("scan", "Cutoff-independence scan of a config file");
  scan->add_option("config", scan_path, "Config file")->required()->check(CLI::ExistingFile);

  std::string sweep_path;
  std::optional<std::string> sweep_param;
  std::optional<double> sweep_min;
  std::optional<double> sweep_max;
  std::optional<int> sweep_steps;
  auto* sweep = app.add_subcommand("sweep", "Parameter sweep of a config file");
  sweep->add_option("config", sweep_path, "Config file")->required()->check(CLI::ExistingFile);
  sweep->add_option("--param", sweep_param, "B0 | E0 | omega0 | mass_ratio")
      ->check(CLI::IsMember({"B0", "E0", "omega0", "mass_ratio"}));
  sweep->add_option("--min", sweep_min, "Sweep start");
  sweep->add_option("--max", sweep_max, "Sweep end");
  sweep->add_option("--steps", sweep_steps, "Number of points (>= 2)");

  app.add_subcommand("keys", "List config keys and units");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("keys")) {
      std::cout << casimir::config::key_reference();
    } else if (*preset) {
      dispatch(casimir::config::preset(preset_name), out);
    } else if (*run) {
      dispatch(casimir::config::load(run_path), out);
    } else if (*scan) {
      auto cfg = casimir::config::load(scan_path);
      cfg.mode = Mode::Scan;
      dispatch(cfg, out);
    } else if (*sweep) {
      auto cfg = casimir::config::load(sweep_path);
      cfg.mode = Mode::Sweep;
      if (sweep_param) cfg.sweep.param = casimir::config::parse_sweep_param(*sweep_param);
      if (sweep_min) cfg.sweep.min = *sweep_min;
      if (sweep_max) cfg.sweep.max = *sweep_max;
      if (sweep_steps) cfg.sweep.steps = *sweep_steps;
      dispatch(cfg, out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
