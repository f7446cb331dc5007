// Copyright 2026 The slender Authors. All rights reserved.
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

#include "slender/thompson.hpp"

namespace {

using namespace slender::thompson;

void BM_ComposeGenerators(benchmark::State& state) {
  PLMap f;
  for (std::int64_t i = 0; i < state.range(0); ++i) {
    f = pl_multiply(f, generator(static_cast<std::uint64_t>(i % 4)));
  }
  auto g = pl_invert(f);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pl_compose(f, g));
  }
}
BENCHMARK(BM_ComposeGenerators)->RangeMultiplier(2)->Range(2, 64);

void BM_GridRoots(benchmark::State& state) {
  auto g = pl_power(generator(0), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pl_find_roots(g, 2, static_cast<std::uint64_t>(state.range(0))));
  }
}
BENCHMARK(BM_GridRoots)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace
