#include <benchmark/benchmark.h>

#include <random>

#include "modal/bisim.hpp"
#include "modal/complete.hpp"
#include "modal/prover.hpp"

using namespace modal;

namespace {

PointedModel random_model(int n, std::mt19937& rng) {
  PointedModel m;
  std::bernoulli_distribution edge(0.15), val(0.5);
  for (int i = 0; i < n; ++i) {
    m.state_names.push_back("w" + std::to_string(i));
    VarSet v;
    if (val(rng)) v.insert("p");
    if (val(rng)) v.insert("q");
    m.valuation.push_back(v);
  }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (edge(rng)) m.edges.insert({u, v});
  m.point = 0;
  return m;
}

void BM_bisim(benchmark::State& state) {
  std::mt19937 rng(7);
  PointedModel a = random_model(static_cast<int>(state.range(0)), rng);
  PointedModel b = random_model(static_cast<int>(state.range(0)), rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(bisimilar(a, b, {"p", "q"}));
}
BENCHMARK(BM_bisim)->Arg(16)->Arg(64)->Arg(256);

void BM_tableau_sat(benchmark::State& state) {
  Formula f = parse("(p -> []q) & <>(p & <>(q & <>p)) & [](q -> <>p)");
  Logic l = *Logic::by_name("s4");
  for (auto _ : state)
    benchmark::DoNotOptimize(satisfiable(l, Formula::conj(f, Formula::top())));
}
BENCHMARK(BM_tableau_sat);

void BM_complete_cc(benchmark::State& state) {
  Formula f = parse("p & <>p & []p");
  Logic l = *Logic::by_name("k4");
  for (auto _ : state)
    benchmark::DoNotOptimize(complete(l, Formula::conj(f, Formula::top())).is_complete());
}
BENCHMARK(BM_complete_cc);

}  // namespace

BENCHMARK_MAIN();
