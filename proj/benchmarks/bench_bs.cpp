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

#include <string>

#include "slender/bs.hpp"

namespace {

using namespace slender;
using namespace slender::bs;

// The unreduced word t^-k a^(2^k) t^k, which collapses to a^(3^k) in BS(2,3).
std::string conjugate_tower(std::int64_t k) {
  std::string text;
  for (std::int64_t i = 0; i < k; ++i) {
    text += "t^-1 ";
  }
  text += "a^" + to_string(BigInt(1) << k);
  for (std::int64_t i = 0; i < k; ++i) {
    text += " t";
  }
  return text;
}

void BM_NormalFormTower(benchmark::State& state) {
  const Presentation pres(2, 3);
  auto w = parse_bs_word(conjugate_tower(state.range(0)), pres);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bs_normal_form(w));
  }
}
BENCHMARK(BM_NormalFormTower)->DenseRange(4, 32, 7);

void BM_EqualityRandomish(benchmark::State& state) {
  const Presentation pres(2, 3);
  auto u = parse_bs_word("t a t^-1 a^2 t a^-1 t^-1 a t a", pres);
  auto v = bs_normal_form(u);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bs_equal(u, v));
  }
}
BENCHMARK(BM_EqualityRandomish);

void BM_FindRoots(benchmark::State& state) {
  const Presentation pres(2, 3);
  const RootBound bound{static_cast<std::size_t>(state.range(0)), 4};
  auto g = bs_power(parse_bs_word("t a", pres), 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bs_find_roots(g, 5, bound));
  }
}
BENCHMARK(BM_FindRoots)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

}  // namespace
