#include <benchmark/benchmark.h>

#include "wedge/central.hpp"
#include "wedge/normal_form.hpp"
#include "wedge/random.hpp"
#include "wedge/tspace.hpp"

namespace {

using namespace wedge;

void BM_BladeMul(benchmark::State& state) {
  Blade a{1, 3, 5, 7, 9, 11}, b{2, 4, 6, 8, 10, 12};
  for (auto _ : state) {
    benchmark::DoNotOptimize(blade_mul(a, b));
  }
}
BENCHMARK(BM_BladeMul);

void BM_ElementMul(benchmark::State& state) {
  Rng rng(1);
  Characteristic ch{3};
  std::vector<GrassmannElement> elems;
  for (int k = 0; k < 64; ++k) elems.push_back(rng.element(ch, false, 8, 16));
  size_t i = 0;
  for (auto _ : state) {
    const GrassmannElement& a = elems[i % elems.size()];
    const GrassmannElement& b = elems[(i + 1) % elems.size()];
    benchmark::DoNotOptimize(a * b);
    benchmark::ClobberMemory();
    ++i;
  }
}
BENCHMARK(BM_ElementMul);

void BM_Normalize(benchmark::State& state) {
  Rng rng(2);
  Characteristic ch{3};
  std::vector<FreePoly> polys;
  for (int k = 0; k < 32; ++k) {
    polys.push_back(rng.poly(ch, false, 4, static_cast<uint32_t>(state.range(0)), 4));
  }
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalize(polys[i++ % polys.size()], ReductionMode::TripleCommutator));
  }
}
BENCHMARK(BM_Normalize)->Arg(4)->Arg(6)->Arg(8);

void BM_SpanAtType(benchmark::State& state) {
  Characteristic ch{3};
  GeneratorSet S = builtin_generators(BuiltinSet::S, ch, 1);
  GeneratorSet TG0 = builtin_generators(BuiltinSet::TG0, ch, 0);
  std::vector<uint32_t> type{2, 2, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(span_at_type(std::vector<GeneratorSet>{S, TG0}, type));
  }
}
BENCHMARK(BM_SpanAtType);

void BM_CentralSearch(benchmark::State& state) {
  Characteristic ch{3};
  std::vector<uint32_t> type{2, 2, 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(central_search(type, ch, false, 12));
  }
}
BENCHMARK(BM_CentralSearch);

}  // namespace

BENCHMARK_MAIN();
