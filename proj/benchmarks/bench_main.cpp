#include <benchmark/benchmark.h>

#include <random>

#include "hamplane/corpus.hpp"
#include "hamplane/oracle.hpp"
#include "hamplane/search.hpp"

using namespace hamplane;

namespace {

void BM_EdgeVectorXor(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  EdgeVector a(m), b(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (rng() & 1U) a.set(i);
    if (rng() & 1U) b.set(i);
  }
  for (auto _ : state) {
    a.xor_unchecked(b);
    benchmark::DoNotOptimize(a.words().data());
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * static_cast<std::int64_t>(m / 8));
}
BENCHMARK(BM_EdgeVectorXor)->Arg(69)->Arg(1024)->Arg(65536);

void BM_Rank(benchmark::State& state) {
  const Graph& g = corpus_entry("tutte").graph;
  const auto vectors = fundamental_basis(g).vectors();
  for (auto _ : state) benchmark::DoNotOptimize(gf2_rank(vectors));
}
BENCHMARK(BM_Rank);

// Unfiltered Gray-code pass over all 2^11 - 1 subsets.
void BM_FallbackDodecahedron(benchmark::State& state) {
  const Graph& g = corpus_entry("dodecahedron").graph;
  const CycleBasis basis = fundamental_basis(g);
  for (auto _ : state) benchmark::DoNotOptimize(search_hamilton_plane(basis, g, {}).planes.size());
}
BENCHMARK(BM_FallbackDodecahedron)->Unit(benchmark::kMicrosecond);

void BM_EnumerateCyclesPetersen(benchmark::State& state) {
  const Graph& g = corpus_entry("petersen").graph;
  const CycleBasis basis = fundamental_basis(g);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all_cycles(g, basis).size());
}
BENCHMARK(BM_EnumerateCyclesPetersen)->Unit(benchmark::kMicrosecond);

// Filtered stage at dimension 24, where the fallback does not run.
void BM_FilteredTutte(benchmark::State& state) {
  const Graph& g = corpus_entry("tutte").graph;
  const CycleBasis basis = fundamental_basis(g);
  const SearchBudget budget{std::uint64_t{1} << 20, 600.0, static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(search_hamilton_plane(basis, g, budget).examined);
}
BENCHMARK(BM_FilteredTutte)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_SolveInsideTutteFaces(benchmark::State& state) {
  const DegreeCounts faces{{4, 6}, {5, 15}, {9, 1}, {10, 3}};
  for (auto _ : state) benchmark::DoNotOptimize(solve_inside(faces, 46).size());
}
BENCHMARK(BM_SolveInsideTutteFaces);

void BM_ModularObstructionGrinberg(benchmark::State& state) {
  const DegreeCounts faces{{5, 21}, {8, 3}, {9, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(modular_obstruction(faces, 46).has_value());
}
BENCHMARK(BM_ModularObstructionGrinberg);

void BM_Oracle(benchmark::State& state, const char* name) {
  const Graph& g = corpus_entry(name).graph;
  for (auto _ : state) benchmark::DoNotOptimize(hamiltonian_oracle(g).nodes);
}
BENCHMARK_CAPTURE(BM_Oracle, tutte, "tutte")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Oracle, grinberg_graph, "grinberg-graph")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Oracle, dodecahedron, "dodecahedron")->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
