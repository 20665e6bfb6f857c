// Copyright 2026 The carpetcurl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "carpet/carpet.hpp"
#include "carpet/counterexample.hpp"
#include "carpet/field.hpp"
#include "carpet/forms.hpp"
#include "carpet/prefractal.hpp"

namespace {

using namespace carpet;

const CarpetSpec& spec() {
  static const CarpetSpec s = odd_reciprocal_spec();
  return s;
}

void BM_PrefractalMeasure(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(prefractal_measure(spec(), m));
}
BENCHMARK(BM_PrefractalMeasure)->DenseRange(1, 4);

void BM_SquareEnumeration(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long count = 0;
    for_each_square(spec(), m, [&](std::int64_t, std::int64_t) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_SquareEnumeration)->DenseRange(1, 3);

void BM_BuildGn(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_g_n(spec(), n));
}
BENCHMARK(BM_BuildGn)->DenseRange(1, 3);

void BM_EnergyGn(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Prefractal pf(spec(), n + 1);
  ScalarField g = build_g_n(spec(), n).field;
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet_energy(g, pf));
}
BENCHMARK(BM_EnergyGn)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_EnergyGnBinary64(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Prefractal pf(spec(), n + 1, Arithmetic::binary64);
  ScalarField g = build_g_n(spec(), n).field;
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet_energy(g, pf));
}
BENCHMARK(BM_EnergyGnBinary64)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Theorem1(benchmark::State& state) {
  ScalarField one = ScalarField::on_unit_square(Poly2::constant(1));
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem1(spec(), one, n, n + 1));
}
BENCHMARK(BM_Theorem1)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_Lemma6(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_lemma6(spec(), Poly2::x(), Poly2::y(), n, n + 1));
}
BENCHMARK(BM_Lemma6)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
