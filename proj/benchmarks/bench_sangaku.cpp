// Timings for the expensive stages. The eliminant is built once, outside
// any timed region, for the benchmarks that need it.

#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "random_poly.hpp"
#include "sangaku/eliminator.hpp"
#include "sangaku/exceptional.hpp"
#include "sangaku/oracle.hpp"
#include "sangaku/series.hpp"

using namespace sangaku;

namespace {

const Poly& pstar() {
  static const std::unique_ptr<Poly> p = std::make_unique<Poly>(eliminate(build_system()).reduced);
  return *p;
}

void resultant_backend(benchmark::State& state, ResultantBackend backend) {
  std::mt19937_64 rng(42);
  const int deg = static_cast<int>(state.range(0));
  const Poly f = testing::random_nonconstant(rng, {Var::x, Var::k}, deg, 1000);
  const Poly g = testing::random_nonconstant(rng, {Var::x, Var::k}, deg, 1000);
  for (auto _ : state) benchmark::DoNotOptimize(resultant(f, g, Var::x, backend));
}

void BM_ResultantSylvester(benchmark::State& s) { resultant_backend(s, ResultantBackend::sylvester); }
void BM_ResultantPrs(benchmark::State& s) { resultant_backend(s, ResultantBackend::prs); }
void BM_ResultantModular(benchmark::State& s) { resultant_backend(s, ResultantBackend::modular); }

void BM_Minimize(benchmark::State& state) {
  const auto bits = static_cast<mpfr_prec_t>(state.range(0));
  const ExtFloat r(Rational(6, 5), bits + 64);
  for (auto _ : state) benchmark::DoNotOptimize(minimize(r, bits).mu);
}

void BM_Eliminate(benchmark::State& state) {
  const CriticalSystem sys = build_system();
  for (auto _ : state) benchmark::DoNotOptimize(eliminate(sys).reduced);
}

void BM_MuTaylor(benchmark::State& state) {
  TaylorOptions opt;
  opt.order = static_cast<int>(state.range(0));
  const Poly& p = pstar();
  for (auto _ : state) benchmark::DoNotOptimize(mu_taylor(p, opt).mu);
}

void BM_DiscriminantAt(benchmark::State& state) {
  const Poly& p = pstar();
  const Rational k0(static_cast<long>(state.range(0)), 100);
  for (auto _ : state) benchmark::DoNotOptimize(discriminant_at(p, k0));
}

}  // namespace

BENCHMARK(BM_ResultantSylvester)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ResultantPrs)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ResultantModular)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Minimize)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Eliminate)->Iterations(1)->Unit(benchmark::kSecond);
BENCHMARK(BM_MuTaylor)->Arg(10)->Arg(40)->Iterations(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiscriminantAt)->Arg(150)->Arg(1001)->Iterations(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
