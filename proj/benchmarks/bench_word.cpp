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

#include <random>

#include "slender/word.hpp"

namespace {

using namespace slender::word;

// A word of the given length with many cancelling neighbours.
Word noisy_word(std::size_t length) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<Letter> syllables;
  const char* names[] = {"a", "b"};
  for (std::size_t i = 0; i < length; ++i) {
    int r = pick(rng);
    syllables.push_back({names[r / 2], slender::BigInt(r % 2 ? 1 : -1)});
  }
  return Word(make_alphabet({"a", "b"}), std::move(syllables));
}

void BM_FreeReduce(benchmark::State& state) {
  auto w = noisy_word(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(free_reduce(w));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FreeReduce)->RangeMultiplier(4)->Range(64, 1 << 16)->Complexity();

}  // namespace
