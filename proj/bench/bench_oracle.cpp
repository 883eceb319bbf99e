// Brute-force model enumeration: OpenMP version against the serial reference,
// and the prime-root solver at different thread counts.
#include "hellyca/generators.hpp"
#include "hellyca/oracle.hpp"
#include "hellyca/pqm_tree.hpp"
#include "hellyca/solver.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

using namespace hca;

namespace {

RelationTable relationsFor(int n) { return PqmTree(randomReducedModel(n, 7)).relations(); }

void serialOracle(benchmark::State& state) {
    const auto rel = relationsFor(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerateByFilterSerial(rel, 10'000'000));
}

void parallelOracle(benchmark::State& state) {
    const auto rel = relationsFor(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerateByFilter(rel, 10'000'000));
}

void primeSolver(benchmark::State& state) {
    omp_set_num_threads(static_cast<int>(state.range(0)));
    // three unsatisfiable-leaning triples on 40 elements: all 2^6 side picks get examined
    const Instance inst = fromTotalOrdering(40, {{1, 2, 3}, {2, 1, 3}, {5, 6, 7}});
    const PqmTree t(inst.model);
    for (auto _ : state) benchmark::DoNotOptimize(solveHellyCliques(t, inst.cliques).helly);
}

}  // namespace

BENCHMARK(serialOracle)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(parallelOracle)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(primeSolver)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
