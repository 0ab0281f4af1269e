// Copyright 2026 The Multiverse Authors
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

#include "multiverse/ensemble.hpp"

namespace {

using namespace multiverse;

void BM_SampleFrequencies(benchmark::State& state) {
  const Kernel k = Kernel::from_counts(
      {{{"Au", "Bu"}, 3}, {{"Au", "Bd"}, 1}, {{"Ad", "Bu"}, 1}, {{"Ad", "Bd"}, 3}});
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_frequencies(k, 1'000'000, 7, workers));
  state.SetItemsProcessed(state.iterations() * 1'000'000);
}
BENCHMARK(BM_SampleFrequencies)->Arg(1)->Arg(4)->UseRealTime();

void BM_ArrowOfTime(benchmark::State& state) {
  const Kernel k = Kernel::from_counts({{{"a"}, 1}, {{"b"}, 2}, {{"c"}, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(arrow_of_time(k, 1 << 16, 8));
}
BENCHMARK(BM_ArrowOfTime);

}  // namespace
