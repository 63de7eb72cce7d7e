// Copyright 2026 The llkp Authors
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

#include <cstdint>
#include <map>

#include <benchmark/benchmark.h>

#include "llkp/io.hpp"
#include "llkp/model.hpp"
#include "llkp/oracle.hpp"
#include "llkp/solver.hpp"

namespace {

// Skewed weights force a long cascade of fixing rounds, which is the
// expensive regime for the quadratic scan.
const llkp::Instance& instance_of(std::int64_t L) {
  static std::map<std::int64_t, llkp::Instance> cache;
  auto it = cache.find(L);
  if (it == cache.end()) {
    llkp::GeneratorConfig cfg;
    cfg.L = static_cast<std::size_t>(L);
    cfg.seed = 12345;
    cfg.weight_skew = 1.0;
    it = cache.emplace(L, llkp::generate_instance(cfg)).first;
  }
  return it->second;
}

void BM_SolveIterative(benchmark::State& state) {
  const llkp::Instance& inst = instance_of(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(llkp::solve_iterative(inst));
  }
}

void BM_SolveSorted(benchmark::State& state) {
  const llkp::Instance& inst = instance_of(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(llkp::solve_sorted(inst));
  }
}

void BM_SolveBisection(benchmark::State& state) {
  const llkp::Instance& inst = instance_of(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(llkp::solve_bisection(inst));
  }
}

}  // namespace

// The iterative solver is quadratic when many rounds fire; cap its range.
BENCHMARK(BM_SolveIterative)
    ->RangeMultiplier(10)
    ->Range(100, 100000)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveSorted)
    ->RangeMultiplier(10)
    ->Range(100, 1000000)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveBisection)
    ->RangeMultiplier(10)
    ->Range(100, 1000000)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
