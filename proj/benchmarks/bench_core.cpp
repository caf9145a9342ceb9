#include <benchmark/benchmark.h>

#include "casimir/engine.hpp"
#include "casimir/fock_oracle.hpp"
#include "casimir/lanczos.hpp"
#include "casimir/oscillator.hpp"
#include "casimir/report.hpp"
#include "casimir/resolvent.hpp"
#include "casimir/vacuum.hpp"

using namespace casimir;

namespace {

model::FieldConfig hydrogen_fields() {
  model::FieldConfig f;
  f.E0 = Vec3(1e5, 0, 0);
  f.B0 = Vec3(0, 0, 17);
  return f;
}

void BM_PlaneWaveElement(benchmark::State& state) {
  const auto p = osc::OscParams::from_system(model::hydrogen_like(10.0));
  const Vec3 k = Vec3(0.3, -0.4, 0.8) / p.sigma;
  const auto levels = osc::levels_up_to(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& l : levels) benchmark::DoNotOptimize(osc::plane_wave_element(p, k, l));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(levels.size()));
}
BENCHMARK(BM_PlaneWaveElement)->Arg(4)->Arg(12);

void BM_KummerMoments(benchmark::State& state) {
  const double X = -static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(engine::kummer_moments(2.5, X));
}
BENCHMARK(BM_KummerMoments)->Arg(1)->Arg(50);

void BM_MassIntegralQuadrature(benchmark::State& state) {
  const double m = units::codata2018().m_electron;
  const vacuum::Cutoff cut(1e3 * vacuum::bethe_wavenumber(m));
  quad::QuadOptions o;
  o.rel_tol = 1e-12;
  for (auto _ : state) benchmark::DoNotOptimize(vacuum::mass_integral_quadrature(m, cut, o));
}
BENCHMARK(BM_MassIntegralQuadrature);

void BM_ClosedFormPreset(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(report::run_preset("hydrogen"));
}
BENCHMARK(BM_ClosedFormPreset)->Unit(benchmark::kMicrosecond);

void BM_LineTwoDivergent(benchmark::State& state) {
  const auto sys = model::hydrogen_like(10.0);
  const auto f = hydrogen_fields();
  const Vec3 Q0 = model::classical_pseudo_momentum(sys, f, Vec3::Zero());
  const vacuum::Cutoff cut(1e3 * vacuum::bethe_wavenumber(units::codata2018().m_electron));
  for (auto _ : state) benchmark::DoNotOptimize(engine::line_two_divergent(sys, f, Q0, cut));
}
BENCHMARK(BM_LineTwoDivergent)->Unit(benchmark::kMillisecond);

void BM_OracleHamiltonian(benchmark::State& state) {
  const auto toy = oracle::toy_problem();
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::build_hamiltonian(toy.sys, toy.fields, toy.Q0, toy.model));
  }
}
BENCHMARK(BM_OracleHamiltonian)->Unit(benchmark::kMillisecond);

void BM_LanczosToyGround(benchmark::State& state) {
  const auto toy = oracle::toy_problem();
  const auto H = oracle::build_hamiltonian(toy.sys, toy.fields, toy.Q0, toy.model).full();
  for (auto _ : state) benchmark::DoNotOptimize(linalg::lanczos_lowest(H, 1e-12));
}
BENCHMARK(BM_LanczosToyGround)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
