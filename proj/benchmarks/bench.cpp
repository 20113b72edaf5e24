#include <benchmark/benchmark.h>

#include <filesystem>

#include "nested/chartable.hpp"
#include "nested/classify.hpp"
#include "nested/constructions.hpp"
#include "nested/io.hpp"
#include "nested/lattice.hpp"
#include "nested/verify.hpp"

using namespace nested;

namespace {

const std::filesystem::path kCorpus = NESTED_CORPUS_DIR;

GroupTable corpus_group(const char* dir, const char* file) { return load_group(kCorpus / dir / file); }

}  // namespace

static void BM_CharacterTable_Example3(benchmark::State& state) {
  const auto g = example3(3, static_cast<std::uint32_t>(state.range(0)), 1u << 13);
  for (auto _ : state) benchmark::DoNotOptimize(compute_character_table(g, 1u << 13));
  state.SetLabel(std::to_string(g.order()));
}
BENCHMARK(BM_CharacterTable_Example3)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_CharacterTable_SL23(benchmark::State& state) {
  const auto g = sl_2_3();
  for (auto _ : state) benchmark::DoNotOptimize(compute_character_table(g));
}
BENCHMARK(BM_CharacterTable_SL23);

static void BM_NormalLattice(benchmark::State& state) {
  const auto g = example4({2, {1, 2}, {}});
  for (auto _ : state) benchmark::DoNotOptimize(NormalLattice::compute(g));
}
BENCHMARK(BM_NormalLattice)->Unit(benchmark::kMillisecond);

static void BM_LoadPc(benchmark::State& state) {
  const auto text = write_pc(example1_pc({2, {1, 2}}));
  for (auto _ : state) benchmark::DoNotOptimize(parse_group(text));
}
BENCHMARK(BM_LoadPc)->Unit(benchmark::kMicrosecond);

static void BM_Classify(benchmark::State& state) {
  const auto g = corpus_group("named", "64.258.pc");
  for (auto _ : state) benchmark::DoNotOptimize(classify(g));
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMillisecond);

static void BM_TheoremSuite(benchmark::State& state) {
  const auto g = example3(3, 2);
  for (auto _ : state) {
    GroupAnalysis a(g);
    benchmark::DoNotOptimize(run_theorem_suite(a));
  }
}
BENCHMARK(BM_TheoremSuite)->Unit(benchmark::kMillisecond);

static void BM_Table1_Order32(benchmark::State& state) {
  const auto entries = list_corpus(kCorpus / "order32");
  for (auto _ : state) {
    Table1Counts t;
    t.order = 32;
    for (const auto& e : entries) t.add(classify(load_group(e.path)));
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_Table1_Order32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
