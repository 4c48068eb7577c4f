#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "plancomp/acxon.hpp"
#include "plancomp/inference.hpp"
#include "plancomp/metrics.hpp"
#include "plancomp/ontology.hpp"

namespace {

using namespace plancomp;

// Two plans of n tasks each, half of them shared, inferred.
KnowledgeGraph pair_kb(std::size_t n) {
  std::vector<std::string> a;
  std::vector<std::string> b;
  for (std::size_t i = 0; i < n; ++i) {
    a.push_back(i % 2 == 0 ? "shared " + std::to_string(i) : "a " + std::to_string(i));
    b.push_back(i % 2 == 0 ? "shared " + std::to_string(i) : "b " + std::to_string(i));
  }
  KnowledgeGraph kb = make_plan_knowledge_graph();
  assert_plan(kb, "plan a", a, static_cast<double>(n), static_cast<double>(n));
  assert_plan(kb, "plan b", b, static_cast<double>(2 * n), static_cast<double>(n + 1));
  compare_all_plans(kb);
  return kb;
}

const InstantiatedPair kPair{{"plan a", Interval::universal()}, {"plan b", Interval::universal()}};

void BM_AssertPlans(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pair_kb(n).size());
}
BENCHMARK(BM_AssertPlans)->Arg(10)->Arg(50)->Arg(200);

void BM_Query(benchmark::State& state) {
  const auto kb = pair_kb(static_cast<std::size_t>(state.range(0)));
  const TriplePattern pattern{.subject = std::string("plan a"),
                              .property = std::string(vocab::kDefinesTask)};
  for (auto _ : state) benchmark::DoNotOptimize(kb.query(pattern));
}
BENCHMARK(BM_Query)->Arg(10)->Arg(50)->Arg(200);

void BM_Retrieve(benchmark::State& state) {
  const auto kb = pair_kb(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(retrieve_narrative_tuples(kb, kPair, Specificity::Level3));
}
BENCHMARK(BM_Retrieve)->Arg(10)->Arg(50)->Arg(200);

void BM_NarratePair(benchmark::State& state) {
  const auto kb = pair_kb(static_cast<std::size_t>(state.range(0)));
  const auto level = specificity_from_int(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(narrate_pair(kb, kPair, level).text);
}
BENCHMARK(BM_NarratePair)->ArgsProduct({{10, 50, 200}, {1, 2, 3}});

void BM_NarrateSingle(benchmark::State& state) {
  const auto kb = pair_kb(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        narrate_single(kb, "plan a", Interval::universal(), Specificity::Level3).text);
}
BENCHMARK(BM_NarrateSingle)->Arg(10)->Arg(50)->Arg(200);

void BM_DaleChall(benchmark::State& state) {
  const auto kb = pair_kb(50);
  const std::string text = narrate_pair(kb, kPair, Specificity::Level3).text;
  for (auto _ : state) benchmark::DoNotOptimize(dale_chall(text));
}
BENCHMARK(BM_DaleChall);

}  // namespace

BENCHMARK_MAIN();
