#include <benchmark/benchmark.h>

#include "prelie/bridge.hpp"
#include "prelie/freelie.hpp"

using namespace prelie;

namespace {

void BM_EnumerateTrees(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto trees = enumerate_trees(n, LabelMode::multilinear());
    benchmark::DoNotOptimize(trees);
  }
}
BENCHMARK(BM_EnumerateTrees)->Arg(4)->Arg(5)->Arg(6);

void BM_DeltaComponent(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto trees = enumerate_trees(n, LabelMode::multilinear());
  for (auto _ : state) {
    for (const Tree& t : trees) {
      TreeVector image = delta(t);
      benchmark::DoNotOptimize(image);
    }
  }
}
BENCHMARK(BM_DeltaComponent)->Arg(4)->Arg(5);

void BM_StarProduct(benchmark::State& state) {
  TreeVector x = tree_vector(parse_tree("1(2(3),4)"));
  TreeVector y = tree_vector(parse_tree("5(6)"));
  for (auto _ : state) {
    TreeVector product = star(x, y);
    benchmark::DoNotOptimize(product);
  }
}
BENCHMARK(BM_StarProduct);

void BM_Coproduct(benchmark::State& state) {
  Word w({1, 2, 3, 4, 5, 6, 7, 8});
  for (auto _ : state) {
    PairVector image = coproduct(w);
    benchmark::DoNotOptimize(image);
  }
}
BENCHMARK(BM_Coproduct);

void BM_KernelBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto basis = lie_kernel_basis({LabelMode::multilinear(), n}, 1);
    benchmark::DoNotOptimize(basis);
  }
}
BENCHMARK(BM_KernelBasis)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_P1Map(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto trees = enumerate_special_trees(n);
  for (auto _ : state) {
    P1Evaluator p1;
    PairVector total;
    for (const Tree& t : trees) total += p1.tree(t);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_P1Map)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
