// Copyright 2026 The spinparity developers
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

#include <sstream>

#include "spinparity/ansatz.hpp"
#include "spinparity/correlations.hpp"
#include "spinparity/potentials.hpp"
#include "spinparity/scenarios.hpp"
#include "spinparity/sweep.hpp"

namespace spinparity {
namespace {

FieldConfig bench_config() {
  return frame_b_in_plane(1.0, 0.5, 1.2, 0.8, 1.5, 0.7);
}

void BM_BuildHamiltonian(benchmark::State& state) {
  const FieldConfig f = bench_config();
  for (auto _ : state) benchmark::DoNotOptimize(build_hamiltonian(f));
}
BENCHMARK(BM_BuildHamiltonian);

void BM_ClosedInvariants(benchmark::State& state) {
  const FieldConfig f = bench_config();
  for (auto _ : state) benchmark::DoNotOptimize(closed_invariants(f));
}
BENCHMARK(BM_ClosedInvariants);

void BM_TraceInvariants(benchmark::State& state) {
  const DiracHamiltonian h = build_hamiltonian(bench_config());
  for (auto _ : state) benchmark::DoNotOptimize(compute_invariants(h));
}
BENCHMARK(BM_TraceInvariants);

void BM_BuildState(benchmark::State& state) {
  const DiracHamiltonian h = build_hamiltonian(bench_config());
  for (auto _ : state) benchmark::DoNotOptimize(build_state(h, 1, 2));
}
BENCHMARK(BM_BuildState);

void BM_Wootters(benchmark::State& state) {
  const StationaryState st = build_state(build_hamiltonian(bench_config()), 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(concurrence_wootters(st.rho));
}
BENCHMARK(BM_Wootters);

void BM_FullReport(benchmark::State& state) {
  const StationaryState st = build_state(build_hamiltonian(bench_config()), 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(full_report(st.rho));
}
BENCHMARK(BM_FullReport);

SweepSpec fig_spec() {
  std::istringstream in(
      "case tensor\n"
      "geometry b_in_plane\n"
      "m 1\nmu 0\nkappa 1\nB 1\n"
      "family P 1,4,10,100\n"
      "s 1\n"
      "sweep theta 0 1.5707963267948966 100\n");
  return parse_config(in);
}

void BM_SweepRow(benchmark::State& state) {
  std::istringstream in(
      "case tensor\ngeometry b_in_plane\nm 1\nkappa 1\nB 1\nP 4\ntheta 0.9\ns 1\n");
  const SweepSpec spec = parse_config(in);
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec, 1, true));
}
BENCHMARK(BM_SweepRow);

void BM_FigureSweep(benchmark::State& state) {
  const SweepSpec spec = fig_spec();
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(run_sweep(spec, threads, true));
}
BENCHMARK(BM_FigureSweep)->Arg(1)->Arg(4);

}  // namespace
}  // namespace spinparity

BENCHMARK_MAIN();
