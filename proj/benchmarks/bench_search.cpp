// Copyright 2026 The cyclosimplex Authors
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

#include <cstdint>

#include "cyclosimplex/arith.hpp"
#include "cyclosimplex/circulant.hpp"
#include "cyclosimplex/cyclic.hpp"
#include "cyclosimplex/cyclotomic.hpp"
#include "cyclosimplex/width.hpp"

namespace cs = cyclosimplex;

namespace {

// Width <= w on Cycl(6, 6301), whose width is 6, so w < 6 scans everything.
void BM_WidthNaive(benchmark::State& state) {
  const auto s = cs::cyclotomic_simplex(6, 6301);
  const int w = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cs::width_at_most(s, w, cs::Search::symmetric));
}
BENCHMARK(BM_WidthNaive)->DenseRange(2, 5);

void BM_WidthMitm(benchmark::State& state) {
  const auto s = cs::cyclotomic_simplex(6, 6301);
  const int w = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cs::width_at_most_mitm(s, w, cs::Search::symmetric));
}
BENCHMARK(BM_WidthMitm)->DenseRange(2, 5);

void BM_WidthExists(benchmark::State& state) {
  const auto s = cs::cyclotomic_simplex(10, 55243);
  const int w = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cs::width_at_most_exists(s, w, cs::Search::symmetric));
}
BENCHMARK(BM_WidthExists)->DenseRange(2, 4);

void BM_IsEmpty(benchmark::State& state) {
  const auto s = cs::cyclotomic_simplex(10, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cs::is_empty(s));
}
BENCHMARK(BM_IsEmpty)->Arg(55243)->Arg(237161);

void BM_PrimeProgression(benchmark::State& state) {
  const auto span = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    cs::PrimeProgression primes(2, span, 11, 1);
    std::uint64_t count = 0;
    while (primes.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_PrimeProgression)->Arg(1 << 20)->Arg(1 << 24);

void BM_Threshold(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cs::m0(d));
}
BENCHMARK(BM_Threshold)->Arg(60)->Arg(1000);

void BM_CirculantVolume(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cs::volume(d, 34));
}
BENCHMARK(BM_CirculantVolume)->Arg(16)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
