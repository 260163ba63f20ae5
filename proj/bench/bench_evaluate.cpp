// OpenMP engine vs the serial reference on square-ish random problems.
#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "ftopsis/engine.hpp"
#include "serial_topsis.hpp"

namespace {

constexpr double kScale[5][3] = {{1, 1, 3}, {1, 3, 5}, {3, 5, 7}, {5, 7, 9}, {7, 9, 9}};
const char* kRatings[5] = {"VP", "P", "F", "G", "VG"};
const char* kWeights[5] = {"VL", "L", "M", "H", "VH"};

struct Pair {
  ftopsis::DecisionProblem problem;
  ftopsis_reference::Problem reference;
};

Pair make(int m, int n, int K) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> term(0, 4);
  ftopsis::ProblemStructure s;
  ftopsis_reference::Problem ref{m, n, K, {}, {}, {}};
  for (int i = 0; i < m; ++i) s.alternatives.push_back({"A" + std::to_string(i), ""});
  for (int j = 0; j < n; ++j) {
    const bool cost = j % 3 == 0;
    s.criteria.push_back({"C" + std::to_string(j), "", cost ? ftopsis::Sense::Cost : ftopsis::Sense::Benefit});
    ref.cost.push_back(cost);
  }
  for (int k = 0; k < K; ++k) s.decision_makers.push_back({"DM" + std::to_string(k), ""});
  std::vector<ftopsis::Assessment> w, r;
  for (int k = 0; k < K * n; ++k) {
    const int t = term(rng);
    w.emplace_back(std::string(kWeights[t]));
    ref.weights.push_back({kScale[t][0], kScale[t][1], kScale[t][2]});
  }
  for (long c = 0; c < static_cast<long>(K) * m * n; ++c) {
    const int t = term(rng);
    r.emplace_back(std::string(kRatings[t]));
    ref.ratings.push_back({kScale[t][0], kScale[t][1], kScale[t][2]});
  }
  return {ftopsis::DecisionProblem(std::move(s), std::move(w), std::move(r)), std::move(ref)};
}

void BM_Engine(benchmark::State& state) {
  const auto pair = make(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(ftopsis::evaluate(pair.problem));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(1));
}

void BM_Reference(benchmark::State& state) {
  const auto pair = make(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(ftopsis_reference::evaluate(pair.reference));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(1));
}

}  // namespace

BENCHMARK(BM_Engine)->Args({2, 4})->Args({200, 20})->Args({2000, 50})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Reference)->Args({2, 4})->Args({200, 20})->Args({2000, 50})->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
