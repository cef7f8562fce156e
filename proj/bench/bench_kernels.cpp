#include "fano/classify.hpp"
#include "fano/reference.hpp"

#include <benchmark/benchmark.h>

using namespace fano;

namespace {

// Growth over all facet inputs of a family; arg 0 serial, 1 OpenMP.
void BM_Classify(benchmark::State& state, const char* basket) {
  auto spec = BasketSpec::parse(basket);
  ClassifyOptions opt;
  opt.parallel = state.range(0) != 0;
  for (auto _ : state) {
    auto run = classify(spec, SearchBounds{}, EquivalenceBudget{}, opt);
    benchmark::DoNotOptimize(run.rows.size());
  }
}

std::vector<Polygon> table_members() {
  std::vector<Polygon> out;
  for (const auto* f : {&reference_thirds_sixths(), &reference_fifths()})
    for (const auto& r : f->rows) out.push_back(normal_form(convex_hull(r.vertices)));
  return out;
}

void BM_Equivalence(benchmark::State& state) {
  auto polys = table_members();
  bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    auto part = equivalence_classes(polys, EquivalenceBudget{}, parallel);
    benchmark::DoNotOptimize(part.classes.size());
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_Classify, thirds_sixths, "family:1/3+1/6")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Classify, fifths, "family:1/5")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_Equivalence)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
