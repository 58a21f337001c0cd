// Copyright 2026 The twostate Authors
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

#include "twostate/oracle.hpp"
#include "twostate/scatter.hpp"
#include "twostate/times.hpp"
#include "twostate/wavepacket.hpp"

namespace {

using namespace twostate;

void BM_SolveAmplitudes(benchmark::State& state) {
  ModelParams p{.E = 0.25, .V = 1.0, .k0 = 1.0};
  for (auto _ : state) {
    p.E = p.E < 0.9 ? p.E + 1e-9 : 0.25;
    benchmark::DoNotOptimize(solve_amplitudes(p));
  }
}
BENCHMARK(BM_SolveAmplitudes);

void BM_TransitionTime(benchmark::State& state) {
  ReducedParams r{.epsilon = 0.25, .V = 1.0, .k0 = 1.0};
  for (auto _ : state) {
    r.epsilon = r.epsilon < 0.9 ? r.epsilon + 1e-9 : 0.25;
    benchmark::DoNotOptimize(transition_time(r));
  }
}
BENCHMARK(BM_TransitionTime);

void BM_SolveRegularized(benchmark::State& state) {
  const ModelParams p{.E = 0.5, .V = 1.0, .k0 = 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(solve_regularized(p, 1e-3));
}
BENCHMARK(BM_SolveRegularized);

void BM_Propagate(benchmark::State& state) {
  const ModelParams p{.E = 0.5, .V = 1.0, .k0 = 1.0};
  const PacketSpec packet = default_packet(p, 30.0);
  const GridSpec grid = default_grid(packet, p);
  for (auto _ : state) benchmark::DoNotOptimize(propagate(packet, p, 1e-3, grid));
}
BENCHMARK(BM_Propagate)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
