#include <benchmark/benchmark.h>

#include "pfrob/pfrob.hpp"

using namespace pfrob;

namespace {

const OrderSpec kGrlex{OrderKind::GradedLex};

Semigroup planar() { return Semigroup({Point{3, 0}, Point{4, 0}, Point{0, 5}, Point{0, 6}, Point{1, 1}}); }

void BM_ReducedBasis(benchmark::State& state) {
    const Semigroup s = planar();
    for (auto _ : state) benchmark::DoNotOptimize(reduced_groebner_basis(s, kGrlex));
}
BENCHMARK(BM_ReducedBasis)->Unit(benchmark::kMillisecond);

void BM_FpGeneral(benchmark::State& state) {
    const Semigroup s = planar();
    const Int p = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(fp_general(s, p, kGrlex));
}
BENCHMARK(BM_FpGeneral)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_F1NormalForm(benchmark::State& state) {
    const Semigroup s = planar();
    for (auto _ : state) benchmark::DoNotOptimize(f1_normalform(s, kGrlex));
}
BENCHMARK(BM_F1NormalForm)->Unit(benchmark::kMillisecond);

void BM_F1Staircase(benchmark::State& state) {
    const Semigroup s = planar();
    for (auto _ : state) benchmark::DoNotOptimize(f1_staircase(s, kGrlex));
}
BENCHMARK(BM_F1Staircase)->Unit(benchmark::kMillisecond);

void BM_F2Indispensable(benchmark::State& state) {
    const Semigroup s = planar();
    for (auto _ : state) benchmark::DoNotOptimize(f2_improved(s, kGrlex));
}
BENCHMARK(BM_F2Indispensable)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
    const Semigroup s = planar();
    const Int p = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(oracle_fp(s, p, kGrlex));
}
BENCHMARK(BM_Oracle)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_NumericalFrobenius(benchmark::State& state) {
    const Semigroup s({Point{state.range(0)}, Point{state.range(0) + 1}, Point{2 * state.range(0) + 3}});
    for (auto _ : state) benchmark::DoNotOptimize(f0_numerical(s));
}
BENCHMARK(BM_NumericalFrobenius)->Arg(10)->Arg(100)->Arg(1000);

} // namespace

BENCHMARK_MAIN();
