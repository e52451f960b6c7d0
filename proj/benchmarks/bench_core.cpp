#include <benchmark/benchmark.h>

#include <random>

#include "qdirac/calculus.hpp"
#include "qdirac/dirac.hpp"
#include "qdirac/random.hpp"
#include "qdirac/spectrum.hpp"

using namespace qdirac;

static void BM_DiscMul(benchmark::State& state) {
    const DiscGrid g(0.5, static_cast<int>(state.range(0)));
    std::mt19937_64 rng = job_rng(1, 0);
    const DiscElement f = random_f0(g, rng, 3, g.size() / 2), h = random_f0(g, rng, 3, g.size() / 2);
    for (auto _ : state) benchmark::DoNotOptimize(mul(f, h));
}
BENCHMARK(BM_DiscMul)->Arg(32)->Arg(64)->Arg(128);

static void BM_Derivation(benchmark::State& state) {
    const DiscGrid g(0.5, static_cast<int>(state.range(0)));
    std::mt19937_64 rng = job_rng(2, 0);
    const DiscElement f = random_f0(g, rng, 2, g.size() / 2);
    for (auto _ : state) benchmark::DoNotOptimize(apply(Derivation::T1, f));
}
BENCHMARK(BM_Derivation)->Arg(32)->Arg(64);

static void BM_AssembleDirac(benchmark::State& state) {
    DiracConfig c;
    c.K = static_cast<int>(state.range(0));
    c.M = 4;
    for (auto _ : state) benchmark::DoNotOptimize(assemble_dirac(c));
}
BENCHMARK(BM_AssembleDirac)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_Spectrum(benchmark::State& state) {
    DiracConfig c;
    c.K = static_cast<int>(state.range(0));
    c.M = 2;
    SpectrumOptions opt;
    opt.delta_step = 0;
    for (auto _ : state) benchmark::DoNotOptimize(spectrum(c, opt));
}
BENCHMARK(BM_Spectrum)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_TwistedCommutator(benchmark::State& state) {
    DiracConfig c;
    c.K = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(twisted_commutator(c, su2::a, 1, 4));
}
BENCHMARK(BM_TwistedCommutator)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
