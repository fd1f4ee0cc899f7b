#include <benchmark/benchmark.h>

#include "su/constructions.hpp"
#include "su/formula.hpp"
#include "su/frame.hpp"
#include "su/prover.hpp"
#include "su/semantics.hpp"
#include "su/strong_union.hpp"

namespace {

void BM_ParsePrintSu(benchmark::State& state) {
  const std::string text = su::axiom(su::AxiomName::Su).str();
  for (auto _ : state) {
    su::Formula f = su::parse_formula(text);
    benchmark::DoNotOptimize(f.str());
  }
}
BENCHMARK(BM_ParsePrintSu);

void BM_TruthSetMedvedev4(benchmark::State& state) {
  su::MedvedevFrame m = su::medvedev(4);
  auto ups = m.frame.upsets();
  su::Model model(m.frame, {{"p", ups[ups.size() / 2]},
                            {"q", ups[ups.size() / 3]},
                            {"r", ups[ups.size() / 5]},
                            {"s", ups[ups.size() / 7]}});
  su::Formula f = su::axiom(su::AxiomName::Su);
  for (auto _ : state) benchmark::DoNotOptimize(su::truth_set(model, f));
}
BENCHMARK(BM_TruthSetMedvedev4);

void BM_Su2Medvedev4(benchmark::State& state) {
  su::MedvedevFrame m = su::medvedev(4);
  for (auto _ : state) benchmark::DoNotOptimize(su::satisfies_su2(m.frame));
}
BENCHMARK(BM_Su2Medvedev4);

void BM_ValidateSuRandom6(benchmark::State& state) {
  su::Frame f = su::random_s4_frame(6, 7);
  su::Formula su_axiom = su::axiom(su::AxiomName::Su);
  for (auto _ : state)
    benchmark::DoNotOptimize(su::frame_validates(f, su_axiom));
}
BENCHMARK(BM_ValidateSuRandom6);

void BM_EnumerateFrames4(benchmark::State& state) {
  for (auto _ : state) {
    su::S4FrameEnumerator e(4);
    int count = 0;
    while (e.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateFrames4);

void BM_ProveIpcSuChain(benchmark::State& state) {
  su::Sequent s = su::parse_sequent(
      "|- ((~p -> q) & (~q -> p) -> r | s) -> (p -> r) | (q -> s)");
  for (auto _ : state) benchmark::DoNotOptimize(su::prove_ipc(s).provable);
}
BENCHMARK(BM_ProveIpcSuChain);

void BM_ConnectedProductChain3(benchmark::State& state) {
  su::Frame chain3(3, {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}});
  for (auto _ : state) {
    su::ConnectedProduct p(chain3, chain3);
    benchmark::DoNotOptimize(p.frame().size());
  }
}
BENCHMARK(BM_ConnectedProductChain3);

}  // namespace

BENCHMARK_MAIN();
