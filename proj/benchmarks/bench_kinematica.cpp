#include <benchmark/benchmark.h>

#include "kinematica/ckgeom.hpp"
#include "kinematica/clifford.hpp"
#include "kinematica/kinclass.hpp"
#include "kinematica/numerics.hpp"
#include "kinematica/spin.hpp"

using namespace kinematica;

namespace {
const KappaPair kAdS{1, -1};

Multivector dense(const KappaPair& kp, double seed) {
    Multivector m{kp, {}};
    for (int i = 0; i < kBladeCount; ++i) m.c[i] = seed + 0.1 * i;
    return m;
}
}  // namespace

static void BM_MultivectorProduct(benchmark::State& st) {
    const Multivector a = dense(kAdS, 0.3), b = dense(kAdS, -0.7);
    for (auto _ : st) benchmark::DoNotOptimize(mv_mul(a, b));
}
BENCHMARK(BM_MultivectorProduct);

static void BM_RotorSandwich(benchmark::State& st) {
    const Multivector r = rotor(kAdS, UnitAxis::normalized(0.2, -0.5, 0.8), 0.7);
    const Multivector v = Multivector::vector(kAdS, 0.4, -0.1, 0.9);
    for (auto _ : st) benchmark::DoNotOptimize(sandwich(r, v));
}
BENCHMARK(BM_RotorSandwich);

static void BM_CoverToSo3(benchmark::State& st) {
    const SpinElement s = sl2_of_word(kAdS, {{Generator::H, 0.3}, {Generator::K, -0.8}, {Generator::P, 0.5}});
    for (auto _ : st) benchmark::DoNotOptimize(cover_to_so3(s));
}
BENCHMARK(BM_CoverToSo3);

static void BM_ClosedFormExpK(benchmark::State& st) {
    double t = 0.1;
    for (auto _ : st) {
        benchmark::DoNotOptimize(exp_K(kAdS, t));
        t += 1e-9;
    }
}
BENCHMARK(BM_ClosedFormExpK);

static void BM_SeriesExpK(benchmark::State& st) {
    numerics::RealMatrix g(3);
    g(1, 2) = -kAdS.kappa2 * 0.1;
    g(2, 1) = 0.1;
    for (auto _ : st) benchmark::DoNotOptimize(numerics::expm(g));
}
BENCHMARK(BM_SeriesExpK);

static void BM_Distance(benchmark::State& st) {
    const KappaPair kp{static_cast<double>(st.range(0)), 1};
    const GenComplex a{0.1, -0.2, 1}, b{0.4, 0.3, 1};
    for (auto _ : st) benchmark::DoNotOptimize(distance(kp, a, b));
}
BENCHMARK(BM_Distance)->Arg(-1)->Arg(0)->Arg(1);

static void BM_ContractionGraph(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(contraction_graph());
}
BENCHMARK(BM_ContractionGraph);

BENCHMARK_MAIN();
