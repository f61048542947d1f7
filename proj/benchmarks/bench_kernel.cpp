#include "hypercox/expr.hpp"
#include "hypercox/trig.hpp"

#include <benchmark/benchmark.h>

using namespace hypercox;

namespace {

void BM_TowerMultiply(benchmark::State& state) {
    const AlgNum a = parse_algebraic("sqrt(5+3*sqrt(2)+2*sqrt(5)+sqrt(10))/2");
    const AlgNum b = parse_algebraic("(1+sqrt(5))/4 - sqrt(2)");
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_TowerMultiply);

void BM_TowerInverse(benchmark::State& state) {
    const AlgNum a = parse_algebraic("sqrt(5+3*sqrt(2)+2*sqrt(5)+sqrt(10))/2 + 3");
    for (auto _ : state) benchmark::DoNotOptimize(AlgNum(1) / a);
}
BENCHMARK(BM_TowerInverse);

void BM_Sign(benchmark::State& state) {
    const AlgNum a = parse_algebraic("sqrt(2)+sqrt(3)-sqrt(5+2*sqrt(6))");
    const AlgNum b = a + AlgNum(mpq_class(1, 1000000));
    for (auto _ : state) benchmark::DoNotOptimize(b.sign());
}
BENCHMARK(BM_Sign);

void BM_Parse(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(parse_algebraic("-sqrt((2*sqrt(5)+5)/3)"));
}
BENCHMARK(BM_Parse);

void BM_CosPiOver(benchmark::State& state) {
    const long m = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(cos_pi_over(m));
}
BENCHMARK(BM_CosPiOver)->Arg(5)->Arg(12)->Arg(17)->Arg(60);

}  // namespace
