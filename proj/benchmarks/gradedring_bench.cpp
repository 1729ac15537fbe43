#include <benchmark/benchmark.h>

#include "gradedring/classify.hpp"
#include "gradedring/document.hpp"
#include "gradedring/transport.hpp"
#include "gradedring/verifier.hpp"

using namespace gradedring;

namespace {

GradedRing cyclic(std::int64_t n) { return trivially_graded(build_ring(Cyclic{n})); }

const GradedRing& corpus_ring(std::string_view name) {
  for (const auto& e : default_corpus().entries)
    if (e.name == name) return e.ring;
  throw std::runtime_error("no corpus entry " + std::string(name));
}

void BM_BuildCyclic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_ring(Cyclic{state.range(0)}).size());
}
BENCHMARK(BM_BuildCyclic)->Arg(16)->Arg(64)->Arg(256)->Arg(1024);

void BM_LatticeCyclic(benchmark::State& state) {
  const auto gr = cyclic(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_graded_ideals(gr).size());
}
BENCHMARK(BM_LatticeCyclic)->Arg(12)->Arg(36)->Arg(64);

void BM_LatticeGaussNine(benchmark::State& state) {
  const auto& gr = corpus_ring("gauss-9-z2");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_graded_ideals(gr).size());
}
BENCHMARK(BM_LatticeGaussNine);

// The triple scans dominate classification: |h(R)|^3 products.
void BM_ClassifyCyclic(benchmark::State& state) {
  const auto gr = cyclic(state.range(0));
  const auto p = principal_ideal(gr.ring(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(classify_ideal(gr, p).flags.size());
}
BENCHMARK(BM_ClassifyCyclic)->Arg(12)->Arg(36)->Arg(64);

void BM_IdealForm(benchmark::State& state) {
  const auto gr = cyclic(36);
  const auto p = principal_ideal(gr.ring(), 12);
  for (auto _ : state) benchmark::DoNotOptimize(strongly_1abs_ideal_form(gr, p).holds);
}
BENCHMARK(BM_IdealForm);

void BM_Localize(benchmark::State& state) {
  const auto gr = cyclic(state.range(0));
  const auto s = MultiplicativeSet::generated_by(gr, std::vector<Elem>{2});
  for (auto _ : state) benchmark::DoNotOptimize(localize(gr, s).ring().size());
}
BENCHMARK(BM_Localize)->Arg(12)->Arg(48)->Arg(96);

void BM_VerifyStatement(benchmark::State& state, const char* id) {
  for (auto _ : state) benchmark::DoNotOptimize(run_corpus(id, default_corpus()).size());
}
BENCHMARK_CAPTURE(BM_VerifyStatement, thm_2_2, "THM_2_2")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyStatement, prop_3_3, "PROP_3_3")->Unit(benchmark::kMillisecond);

void BM_VerifyAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_corpus("all", default_corpus()).size());
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
