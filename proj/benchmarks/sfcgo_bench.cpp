// Copyright 2026 The sfcgo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "sfcgo/bench.hpp"
#include "sfcgo/curve.hpp"
#include "sfcgo/direct.hpp"
#include "sfcgo/gkls.hpp"
#include "sfcgo/hull.hpp"
#include "sfcgo/mgas.hpp"

namespace sfcgo {

static void MapAbscissa(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CurveMap cm = CurveMap::unit(n, 10);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> xs(1024);
  for (auto& x : xs) x = u(rng);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cm.map(xs[i++ & 1023]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(MapAbscissa)->DenseRange(2, 5);

static void Nondominated(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::vector<std::vector<DiagramPoint>> diagrams;
  for (int t = 0; t < 64; ++t) diagrams.push_back(testing::random_diagram(rng, 50));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nondominated(diagrams[i++ & 63]));
  }
}
BENCHMARK(Nondominated);

static void GklsEvaluate(benchmark::State& state) {
  const GklsFunction g = generate(gkls_class(static_cast<int>(state.range(0))), 1);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Point> ys(1024, Point(g.spec().dim));
  for (auto& y : ys) {
    for (auto& c : y) c = u(rng);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g(ys[i++ & 1023]));
  }
}
BENCHMARK(GklsEvaluate)->Arg(1)->Arg(8);

// One full solve of a GKLS function; reports the trial count alongside time.
static void SolveClassFunction(benchmark::State& state) {
  const Algorithm algo = state.range(0) == 0 ? Algorithm::kMgas : Algorithm::kDirect;
  const GklsFunction g = generate(gkls_class(static_cast<int>(state.range(1))), 1);
  BenchParams p;
  p.max_trials = 100000;
  std::int64_t trials = 0;
  for (auto _ : state) {
    const RunResult r = run_function(algo, g, p);
    trials = r.trials;
    benchmark::DoNotOptimize(r.f_min);
  }
  state.counters["trials"] = static_cast<double>(trials);
  state.SetLabel(std::string(to_string(algo)));
}
BENCHMARK(SolveClassFunction)
    ->ArgsProduct({{0, 1}, {1, 2, 3}})
    ->Unit(benchmark::kMillisecond);

}  // namespace sfcgo

BENCHMARK_MAIN();
