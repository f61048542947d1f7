#include "corpus.hpp"

#include "hypercox/arith.hpp"
#include "hypercox/canon.hpp"
#include "hypercox/faces.hpp"
#include "hypercox/vinberg.hpp"

#include <benchmark/benchmark.h>

using namespace hypercox;
using namespace hypercox::testing;

namespace {

void BM_ClassifyPrism(benchmark::State& state) {
    const GramMatrix g = load_polytope("prism-fig1");
    for (auto _ : state) benchmark::DoNotOptimize(classify(g));
}
BENCHMARK(BM_ClassifyPrism)->Unit(benchmark::kMillisecond);

void BM_ClassifyBugaenko(benchmark::State& state) {
    const GramMatrix& g = fixture_gram("bugaenko-lattice");
    for (auto _ : state) benchmark::DoNotOptimize(classify(g));
}
BENCHMARK(BM_ClassifyBugaenko)->Unit(benchmark::kMillisecond);

void BM_CanonicalKey(benchmark::State& state) {
    const GramMatrix& g = fixture_gram("lattice-15");
    for (auto _ : state) benchmark::DoNotOptimize(canonical_key(g));
}
BENCHMARK(BM_CanonicalKey)->Unit(benchmark::kMillisecond);

void BM_FacetTree(benchmark::State& state) {
    const GramMatrix& g = fixture_gram("bugaenko-lattice");
    TreeOptions opt;
    opt.jobs = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(facet_tree(g, opt));
}
BENCHMARK(BM_FacetTree)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Vinberg(benchmark::State& state, const char* name) {
    const DiagonalLattice l = load_lattice(name);
    for (auto _ : state) benchmark::DoNotOptimize(vinberg_run(l));
}
BENCHMARK_CAPTURE(BM_Vinberg, lattice_15, "lattice-15")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Vinberg, bugaenko, "bugaenko-lattice")->Unit(benchmark::kMillisecond);

}  // namespace
