#include <random>

#include <benchmark/benchmark.h>

#include <gfkit/hurwitz.hpp>
#include <gfkit/manybody.hpp>
#include <gfkit/oscillator.hpp>
#include <gfkit/special.hpp>
#include <gfkit/unitary.hpp>
#include <gfkit/wigner.hpp>

using namespace gfkit;

static void BM_ThreeJ(benchmark::State& state) {
    const int tj = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(wigner_3j(tj, tj, tj, 0, 0, 0));
}
BENCHMARK(BM_ThreeJ)->Arg(8)->Arg(40)->Arg(200);

static void BM_SixJ(benchmark::State& state) {
    const int t = static_cast<int>(state.range(0));
    SixJLabel s{{t, t, t, t, t, t}};
    for (auto _ : state) benchmark::DoNotOptimize(wigner_6j_gf(s));
}
BENCHMARK(BM_SixJ)->Arg(2)->Arg(4)->Arg(6);

static void BM_SixJOracle(benchmark::State& state) {
    const int t = static_cast<int>(state.range(0));
    SixJLabel s{{t, t, t, t, t, t}};
    for (auto _ : state) benchmark::DoNotOptimize(wigner_6j_oracle(s));
}
BENCHMARK(BM_SixJOracle)->Arg(2)->Arg(4)->Arg(6);

static void BM_GelfandEnumerate(benchmark::State& state) {
    IrrepLabel h(static_cast<size_t>(state.range(0)), 0);
    h[0] = 3;
    h[1] = 2;
    h[2] = 1;
    for (auto _ : state) benchmark::DoNotOptimize(gelfand_enumerate(h));
}
BENCHMARK(BM_GelfandEnumerate)->Arg(3)->Arg(4)->Arg(5);

static void BM_HurwitzSymbolic(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(symbolic_polys(hurwitz_symbolic(n)));
}
BENCHMARK(BM_HurwitzSymbolic)->Arg(4)->Arg(8);

static void BM_HydrogenMomentum(benchmark::State& state) {
    HydrogenState s{3, 4, 1, {}};
    for (auto _ : state) benchmark::DoNotOptimize(hydrogen_momentum_radial(s, 0.7));
}
BENCHMARK(BM_HydrogenMomentum);

static void BM_MagneticPropagator(benchmark::State& state) {
    OscillatorParams p;
    for (auto _ : state) benchmark::DoNotOptimize(magnetic_propagator(p, 0.3, {0.2, -0.4}, {0.5, 0.1}, {0, -1}));
}
BENCHMARK(BM_MagneticPropagator);

static void BM_CramerRational(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-9, 9);
    RationalMatrix A(n, std::vector<Rational>(n)), B(n, std::vector<Rational>(2));
    for (auto& r : A)
        for (auto& x : r) x = d(rng);
    for (int i = 0; i < n; ++i) A[i][i] += 20;
    for (auto& r : B)
        for (auto& x : r) x = d(rng);
    for (auto _ : state) benchmark::DoNotOptimize(generalized_cramer(SubstitutionQuery<Rational>{A, B, {0, n - 1}}));
}
BENCHMARK(BM_CramerRational)->Arg(4)->Arg(8)->Arg(16);

static void BM_Thouless(benchmark::State& state) {
    const int M = static_cast<int>(state.range(0));
    CMatrix R = CMatrix::Identity(M, M);
    R(0, M - 1) = R(M - 1, 0) = 0.3;
    for (auto _ : state) benchmark::DoNotOptimize(thouless({M, M / 2, R}));
}
BENCHMARK(BM_Thouless)->Arg(4)->Arg(6)->Arg(8);

static void BM_LipkinGap(benchmark::State& state) {
    LipkinModel m{static_cast<int>(state.range(0)), 1.0, 0.1};
    for (auto _ : state) benchmark::DoNotOptimize(lipkin_gap_error(m, 4));
}
BENCHMARK(BM_LipkinGap)->Arg(8)->Arg(32);
