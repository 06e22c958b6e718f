#include <benchmark/benchmark.h>

#include "ejnf/decomp.hpp"
#include "ejnf/verify.hpp"

using namespace ejnf;

namespace {

// n-dim structure mixing the whole palette, fixed seed.
const char* structure_for(std::int64_t n) {
  switch (n) {
    case 6: return "0:2,1;1:2;i:1";
    case 8: return "0:3;1:2,1;-1:1;i:1";
    default: return "0:3,1;1:2,2;-1:1;2:2;i:1";  // 12
  }
}

void BM_JordanSmallExample(benchmark::State& state) {
  Matrix a{{2, 1, 1}, {-4, 5, 4}, {1, 0, 2}};
  for (auto _ : state) benchmark::DoNotOptimize(jordan_decomposition(a));
}
BENCHMARK(BM_JordanSmallExample);

void BM_JordanGenerated(benchmark::State& state) {
  auto c = generate_case(parse_structure(structure_for(state.range(0))), 11, 3);
  for (auto _ : state) benchmark::DoNotOptimize(jordan_decomposition(c.A));
}
BENCHMARK(BM_JordanGenerated)->Arg(6)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_SchurGenerated(benchmark::State& state) {
  auto c = generate_case(parse_structure(structure_for(state.range(0))), 11, 3);
  for (auto _ : state) benchmark::DoNotOptimize(trigonalize(c.A));
}
BENCHMARK(BM_SchurGenerated)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Rref(benchmark::State& state) {
  auto c = generate_case(parse_structure(structure_for(state.range(0))), 11, 3);
  for (auto _ : state) benchmark::DoNotOptimize(rref(c.A));
}
BENCHMARK(BM_Rref)->Arg(6)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
