#include "modpoly/closedform.hpp"
#include "modpoly/jfun.hpp"
#include "modpoly/recurrence.hpp"
#include "modpoly/solver.hpp"

#include <benchmark/benchmark.h>

using namespace modpoly;

static void BM_SeriesMul(benchmark::State& state) {
  const auto j = j_coefficients(state.range(0)).series();
  for (auto _ : state) benchmark::DoNotOptimize(j * j);
}
BENCHMARK(BM_SeriesMul)->Arg(100)->Arg(400)->Arg(1000);

static void BM_JCoefficients(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(j_coefficients(state.range(0)));
}
BENCHMARK(BM_JCoefficients)->Arg(100)->Arg(1000);

static void BM_ClosedRow(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  const auto j = j_coefficients(ell);
  for (auto _ : state) benchmark::DoNotOptimize(closed_row(ell, std::min(ell, 40), j));
}
BENCHMARK(BM_ClosedRow)->Arg(31)->Arg(97)->Unit(benchmark::kMillisecond);

static void BM_RecurrenceRow(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  const auto j = j_coefficients(ell);
  for (auto _ : state) benchmark::DoNotOptimize(recurrence_row(ell, ell, j));
}
BENCHMARK(BM_RecurrenceRow)->Arg(31)->Arg(97)->Unit(benchmark::kMillisecond);

static void BM_Solver(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  const auto j = j_coefficients(solver_min_j_count(ell));
  for (auto _ : state) benchmark::DoNotOptimize(solve_full_polynomial(ell, j));
}
BENCHMARK(BM_Solver)->Arg(5)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
