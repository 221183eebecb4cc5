/*
 * Microbenchmarks for the evaluator hot paths.  The interesting scaling
 * knobs are the imaginary part (Euler-Maclaurin term counts grow ~2|Im s|),
 * the truncation bound N, and the smoothing scale T (direct-sum work grows
 * like (3T)^n).
 */

#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "mhz/dirichlet.hpp"
#include "mhz/hurwitz.hpp"
#include "mhz/lab.hpp"
#include "mhz/multizeta.hpp"
#include "mhz/numcore.hpp"
#include "mhz/polyparse.hpp"

namespace {

using mhz::cplx;

void bm_gamma(benchmark::State& state) {
    const cplx z(0.75, static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(mhz::gamma(z));
}
BENCHMARK(bm_gamma)->Arg(5)->Arg(50)->Arg(500);

void bm_hurwitz_zeta(benchmark::State& state) {
    const cplx s(0.75, static_cast<double>(state.range(0)));
    const auto alpha = mhz::hurwitz_param::rational(1, 3);
    for (auto _ : state) benchmark::DoNotOptimize(mhz::hurwitz_zeta(s, alpha));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_hurwitz_zeta)->Arg(10)->Arg(100)->Arg(1000)->Complexity();

void bm_hurwitz_smoothed(benchmark::State& state) {
    const cplx s(0.6, 20.0);
    const auto alpha = mhz::hurwitz_param::transcendental(1.4142135623730951);
    const double T = static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(mhz::hurwitz_smoothed(s, alpha, T));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_hurwitz_smoothed)->Arg(50)->Arg(200)->Arg(800)->Complexity();

void bm_zeta_trunc_2(benchmark::State& state) {
    const mhz::multi_point s{cplx(0.8, 30.0), cplx(0.8, 40.0)};
    const mhz::param_vector alpha{mhz::hurwitz_param::rational(1, 1),
                                  mhz::hurwitz_param::rational(1, 1)};
    const std::int64_t N = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(mhz::zeta_trunc(s, alpha, N));
    state.SetComplexityN(N);
}
BENCHMARK(bm_zeta_trunc_2)->Arg(1000)->Arg(10000)->Arg(100000)->Complexity();

void bm_zeta_smoothed_2(benchmark::State& state) {
    const mhz::multi_point s{cplx(2.5, 3.0), cplx(3.0, 4.0)};
    const mhz::param_vector alpha{mhz::hurwitz_param::rational(1, 1),
                                  mhz::hurwitz_param::rational(1, 1)};
    const double T = static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(mhz::zeta_smoothed(s, alpha, T));
}
BENCHMARK(bm_zeta_smoothed_2)->Arg(5)->Arg(15)->Arg(30);

void bm_zeta_eval_engine_2(benchmark::State& state) {
    const mhz::multi_point s{cplx(0.8, 40.0), cplx(0.8, 50.0)};
    const mhz::param_vector alpha{mhz::hurwitz_param::rational(1, 1),
                                  mhz::hurwitz_param::rational(1, 1)};
    const double T = static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(mhz::zeta_eval_engine(s, alpha, T));
}
BENCHMARK(bm_zeta_eval_engine_2)->Arg(60)->Arg(120);

void bm_character_table(benchmark::State& state) {
    const std::int64_t q = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(mhz::character_table(q));
}
BENCHMARK(bm_character_table)->Arg(240)->Arg(5040);

// one shift of the universality scan: 81-point grid sup against target == 1
void bm_sup_distance(benchmark::State& state) {
    const mhz::compact_box box({mhz::axis_box{0.73, 0.77, -0.02, 0.02}}, 9);
    const mhz::param_vector alpha{mhz::hurwitz_param::rational(1, 1)};
    const mhz::polynomial target = mhz::parse_polynomial("1", 1);
    const std::vector<double> shift{static_cast<double>(state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(
            mhz::sup_distance(alpha, shift, target, box));
}
BENCHMARK(bm_sup_distance)->Arg(50)->Arg(500);

}  // namespace

BENCHMARK_MAIN();
