// Copyright 2026 The bosonlaw Authors
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

#include "bosonlaw/amplitude.hpp"
#include "bosonlaw/permanent.hpp"
#include "bosonlaw/zero_report.hpp"
#include "oracles.hpp"

namespace {

using namespace bosonlaw;

void BM_Permanent(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto a = oracle::gaussian_matrix(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(permanent(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Permanent)->DenseRange(4, 20, 4);

template <Amplitude (*Method)(const Interferometer&, const OccupationVector&, const OccupationVector&)>
void BM_Amplitude(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto u = oracle::haar_unitary(3, rng);
  const int m = static_cast<int>(state.range(0));
  const OccupationVector in{m, m, m}, out{3 * m - 2, 2, 0};
  for (auto _ : state) benchmark::DoNotOptimize(Method(u, in, out));
}
BENCHMARK_TEMPLATE(BM_Amplitude, amp_permanent)->DenseRange(1, 5);
BENCHMARK_TEMPLATE(BM_Amplitude, amp_tables)->DenseRange(1, 5);

void BM_Recurrence(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto u = oracle::haar_unitary(3, rng);
  const int m = static_cast<int>(state.range(0));
  const OccupationVector in{m, m, m}, out{3 * m - 2, 2, 0};
  for (auto _ : state) benchmark::DoNotOptimize(amp_recurrence(u, in, out));
}
BENCHMARK(BM_Recurrence)->DenseRange(1, 5);

void BM_ZeroReport(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bs_zero_report({9, 4}, {4, 9}, 2000));
}
BENCHMARK(BM_ZeroReport);

}  // namespace

BENCHMARK_MAIN();
