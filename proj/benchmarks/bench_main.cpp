#include <benchmark/benchmark.h>

#include "diracsol/model.hpp"
#include "diracsol/oracle.hpp"
#include "diracsol/special.hpp"
#include "diracsol/spectrum.hpp"
#include "diracsol/wavefunctions.hpp"

namespace {

using namespace diracsol;

PhysicalParams params(double b, double q, double A = 0.0) {
    PhysicalParams p;
    p.b = b;
    p.q = q;
    p.A = A;
    return p;
}

void BM_solve_energy(benchmark::State& state) {
    const PhysicalParams p = params(0.1, 1.0, 0.2);
    const QuantumNumbers qn = map_kappa(-2, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_energy(SymmetryMode::Spin, p, qn));
    }
}
BENCHMARK(BM_solve_energy)->Arg(0)->Arg(3);

void BM_laguerre(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    double x = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(laguerre(n, 1.5, x));
        x = x < 30.0 ? x + 1e-3 : 0.3; // keep the argument moving
    }
}
BENCHMARK(BM_laguerre)->Arg(2)->Arg(10)->Arg(40);

void BM_primary_wavefunction(benchmark::State& state) {
    const PhysicalParams p = params(0.1, 1.0);
    const QuantumNumbers qn = map_kappa(-2, 1);
    const EnergySolution sol = solve_energy(SymmetryMode::Spin, p, qn);
    GridSpec grid;
    grid.points = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(primary_wavefunction(
            SymmetryMode::Spin, p, qn, sol.particle.energy, grid));
    }
}
BENCHMARK(BM_primary_wavefunction)->Arg(256)->Arg(2000);

void BM_integrate_once(benchmark::State& state) {
    const PhysicalParams p = params(0.0, 1.0);
    const QuantumNumbers qn = map_kappa(-1, 1);
    ShootingConfig cfg;
    cfg.steps = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            integrate_once(OdeVariant::ReducedSpin, p, qn, 0.55, cfg));
    }
}
BENCHMARK(BM_integrate_once)->Arg(2000)->Arg(6000);

void BM_shoot_eigenvalue(benchmark::State& state) {
    const PhysicalParams p = params(0.0, 1.0);
    const QuantumNumbers qn = map_kappa(-1, 1);
    ShootingConfig cfg;
    cfg.bracket_lo = 0.4;
    cfg.bracket_hi = 0.8;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            shoot_eigenvalue(OdeVariant::ReducedSpin, p, qn, cfg));
    }
}
BENCHMARK(BM_shoot_eigenvalue);

} // namespace

BENCHMARK_MAIN();
