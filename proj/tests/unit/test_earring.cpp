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

#include <random>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"
#include "slender/catalog.hpp"
#include "slender/earring.hpp"
#include "support.hpp"

using namespace slender;
using namespace slender::earring;
using slender::testing::seed_for;
using slender::testing::uniform;
using word::Word;

namespace {

Word ew(std::string_view text) { return word::parse_word(text, earring_alphabet()); }

std::uint64_t index_of(const word::Letter& letter) { return *word::generator_index(letter.base); }

}  // namespace

TEST_CASE("generators", "[earring]") {
  auto g = ew_generator(2, 3);
  CHECK(g.level(1).empty());
  CHECK(g.level(2) == ew("a_2"));
  CHECK(g.level(3) == ew("a_2"));
  auto h = ew_generator(5, 3);
  CHECK(h == TruncatedEarringWord(3));
  CHECK(coherence_check(g));
  CHECK(coherence_check(h));
  CHECK_THROWS_AS(ew_generator(0, 3), EarringError);
}

TEST_CASE("validated construction", "[earring]") {
  CHECK_NOTHROW(TruncatedEarringWord({ew("a_1"), ew("a_1 a_2")}));
  CHECK_THROWS_AS(TruncatedEarringWord({ew("a_1"), ew("a_2")}), EarringError);
  CHECK_THROWS_AS(TruncatedEarringWord({ew("a_2")}), EarringError);
  CHECK_THROWS_AS(TruncatedEarringWord({ew("a_1 a_1^-1")}), EarringError);
  CHECK_THROWS_AS(TruncatedEarringWord(0), EarringError);
}

TEST_CASE("concatenation and inversion", "[earring]") {
  auto a1 = ew_generator(1, 3);
  auto a2 = ew_generator(2, 3);
  auto p = ew_concat(a1, a2);
  CHECK(p.level(1) == ew("a_1"));
  CHECK(p.level(2) == ew("a_1 a_2"));
  CHECK(ew_concat(p, ew_invert(p)) == TruncatedEarringWord(3));
  CHECK(ew_invert(ew_invert(p)) == p);
  CHECK_THROWS_AS(ew_concat(a1, ew_generator(1, 4)), DepthMismatch);
  CHECK_THROWS_AS(p.level(4), DepthMismatch);
}

TEST_CASE("projections", "[earring]") {
  auto u = from_word(ew("a_1 a_2 a_1"), 3);
  auto low = ew_project_low(u, 1);
  for (std::uint64_t n = 1; n <= 3; ++n) {
    CHECK(low.level(n) == ew("a_1^2"));
  }
  CHECK(ew_project_low(low, 1) == low);
  CHECK(ew_project_low(ew_generator(3, 4), 2) == TruncatedEarringWord(4));
  CHECK(ew_project_low(u, 0) == TruncatedEarringWord(3));
  CHECK(ew_project_high(u, 1).top() == ew("a_2"));
  CHECK(ew_project_high(u, 0) == u);
  CHECK(ew_project_high(ew_generator(3, 4), 2) == ew_generator(3, 4));
  CHECK(ew_project_high(ew_generator(2, 4), 2) == TruncatedEarringWord(4));
}

TEST_CASE("splitting into low and high blocks", "[earring]") {
  auto u = from_word(ew("a_1 a_2 a_1"), 3);
  auto blocks = ew_split(u, 1);
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0] == Block{BlockKind::low, ew("a_1")});
  CHECK(blocks[1] == Block{BlockKind::high, ew("a_2")});
  CHECK(blocks[2] == Block{BlockKind::low, ew("a_1")});
  auto only_low = ew_split(from_word(ew("a_1 a_2^3"), 3), 2);
  REQUIRE(only_low.size() == 1);
  CHECK(only_low[0].kind == BlockKind::low);
  CHECK(ew_split(TruncatedEarringWord(3), 1).empty());
}

TEST_CASE("diagonal words", "[earring]") {
  std::vector<Word> w;
  for (std::uint64_t i = 1; i <= 4; ++i) {
    w.push_back(ew(word::indexed_name("a", i + 1)));
  }
  std::vector<BigInt> m{3, 2, 5, 1};
  auto u = ew_diag_word(w, m, 4);
  REQUIRE(u.size() == 5);
  CHECK(u[0].level(2) == ew("a_2"));
  CHECK(u[0].level(3) == ew("a_2 a_3^3"));
  auto empty = ew_diag_word(std::vector<Word>(4, Word(earring_alphabet())), m, 4);
  for (const auto& ui : empty) {
    CHECK(ui == TruncatedEarringWord(4));
  }
  CHECK_THROWS_AS(ew_diag_word({ew("a_1")}, {BigInt(2)}, 3), EarringError);
  CHECK_THROWS_AS(ew_diag_word({ew("a_2"), ew("a_2")}, {BigInt(2), BigInt(2)}, 3), EarringError);
  CHECK_THROWS_AS(ew_diag_word({ew("a_2")}, {BigInt(0)}, 3), EarringError);
  std::vector<BigInt> huge(6, BigInt(50));
  std::vector<Word> dense;
  for (std::uint64_t i = 1; i <= 6; ++i) {
    dense.push_back(ew(word::indexed_name("a", i + 1) + " " + word::indexed_name("a", 7)));
  }
  CHECK_THROWS_AS(ew_diag_word(dense, huge, 7, 1000), BudgetExceeded);
}

TEST_CASE("diagonal recursion holds at every level", "[earring][property]") {
  std::mt19937_64 rng(seed_for("earring.diag"));
  for (int trial = 0; trial < 40; ++trial) {
    auto depth = static_cast<std::uint64_t>(uniform(rng, 1, 8));
    auto w = testing::random_diag_words(rng, depth);
    std::vector<BigInt> m;
    for (std::uint64_t i = 0; i < depth; ++i) {
      m.push_back(uniform(rng, 1, 3));
    }
    auto u = ew_diag_word(w, m, depth);
    for (std::uint64_t i = 1; i <= depth; ++i) {
      CHECK(u[i - 1] == ew_concat(from_word(w[i - 1], depth), ew_power(u[i], m[i - 1])));
      CHECK(coherence_check(u[i - 1]));
    }
    Word whole = testing::oracle_diag_word(w, m, depth);
    for (std::uint64_t n = 1; n <= depth; ++n) {
      CHECK(u[0].level(n) == testing::oracle_earring_level(whole, n));
    }
  }
}

TEST_CASE("projection laws", "[earring][property]") {
  std::mt19937_64 rng(seed_for("earring.laws"));
  const std::uint64_t depth = 6;
  for (int i = 0; i < 300; ++i) {
    auto u = testing::random_earring_word(rng, depth, 10);
    auto v = testing::random_earring_word(rng, depth, 10);
    auto n = static_cast<std::uint64_t>(uniform(rng, 0, depth));
    CHECK(ew_project_low(ew_project_low(u, n), n) == ew_project_low(u, n));
    CHECK(ew_project_low(ew_concat(u, v), n) ==
          ew_concat(ew_project_low(u, n), ew_project_low(v, n)));
    CHECK(ew_project_high(ew_concat(u, v), n) ==
          ew_concat(ew_project_high(u, n), ew_project_high(v, n)));
    CHECK(ew_project_high(ew_project_high(u, n), n) == ew_project_high(u, n));
    CHECK(ew_project_low(ew_project_high(u, n), n) == TruncatedEarringWord(depth));
    // Blocks reassemble the top level and alternate.
    auto blocks = ew_split(u, n);
    std::vector<word::Letter> all;
    std::vector<word::Letter> low;
    std::vector<word::Letter> high;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (b > 0) {
        CHECK(blocks[b].kind != blocks[b - 1].kind);
      }
      CHECK_FALSE(blocks[b].letters.empty());
      for (const auto& letter : blocks[b].letters.syllables()) {
        CHECK((blocks[b].kind == BlockKind::low) == (index_of(letter) <= n));
        all.push_back(letter);
        (blocks[b].kind == BlockKind::low ? low : high).push_back(letter);
      }
    }
    CHECK(word::free_reduce(Word(earring_alphabet(), all)) == u.top());
    CHECK(word::free_reduce(Word(earring_alphabet(), low)) == ew_project_low(u, n).top());
    CHECK(word::free_reduce(Word(earring_alphabet(), high)) == ew_project_high(u, n).top());
  }
}

TEST_CASE("coherence survives random operation sequences", "[earring][property]") {
  std::mt19937_64 rng(seed_for("earring.coherence"));
  const std::uint64_t depth = 8;
  for (int i = 0; i < 100; ++i) {
    auto u = testing::random_earring_word(rng, depth, 6);
    for (int step = 0; step < 8; ++step) {
      switch (uniform(rng, 0, 4)) {
        case 0:
          u = ew_concat(u, testing::random_earring_word(rng, depth, 6));
          break;
        case 1:
          u = ew_invert(u);
          break;
        case 2:
          u = ew_project_low(u, static_cast<std::uint64_t>(uniform(rng, 1, depth)));
          break;
        case 3:
          u = ew_project_high(u, static_cast<std::uint64_t>(uniform(rng, 0, depth)));
          break;
        default:
          u = ew_power(u, uniform(rng, -2, 2));
          break;
      }
      REQUIRE(coherence_check(u));
    }
  }
}

TEST_CASE("evaluating finitely supported maps", "[earring]") {
  catalog::IntegerGroup z;
  GeneratorMap<catalog::IntegerGroup> trivial(z, {}, 0);
  CHECK(ew_eval_hom(trivial, from_word(ew("a_1 a_2 a_1"), 3)) == 0);
  catalog::FreeGroup f2(2);
  auto g = f2.parse("a b");
  GeneratorMap<catalog::FreeGroup> phi(f2, {{1, g}}, 1);
  CHECK(ew_eval_hom(phi, from_word(ew("a_1 a_2 a_1"), 3)) == f2.parse("a b a b"));
  GeneratorMap<catalog::FreeGroup> deep(f2, {{4, g}}, 4);
  CHECK_THROWS_AS(ew_eval_hom(deep, ew_generator(1, 3)), DepthMismatch);
  CHECK_THROWS_AS(GeneratorMap<catalog::FreeGroup>(f2, {{5, g}}, 4), EarringError);
}

TEST_CASE("maps factor through their support projection", "[earring][property]") {
  std::mt19937_64 rng(seed_for("earring.factor"));
  catalog::FreeGroup f2(2);
  const std::uint64_t depth = 8;
  for (int i = 0; i < 100; ++i) {
    auto bound = static_cast<std::uint64_t>(uniform(rng, 1, depth));
    std::map<std::uint64_t, Word> images;
    for (std::uint64_t n = 1; n <= bound; ++n) {
      images.emplace(n, testing::random_reduced_free_word(rng, f2, 3));
    }
    GeneratorMap<catalog::FreeGroup> phi(f2, images, bound);
    auto u = testing::random_earring_word(rng, depth, 10);
    auto v = testing::random_earring_word(rng, depth, 10);
    CHECK(ew_eval_hom(phi, ew_project_low(u, bound)) == ew_eval_hom(phi, u));
    CHECK(ew_eval_hom(phi, ew_concat(u, v)) ==
          f2.multiply(ew_eval_hom(phi, u), ew_eval_hom(phi, v)));
    // Substitution into the unreduced top word.
    Word expected = f2.identity();
    for (const auto& letter : u.top().syllables()) {
      auto n = index_of(letter);
      if (n <= bound) {
        expected = f2.multiply(expected, word::fg_power(images.at(n), letter.exponent));
      }
    }
    CHECK(ew_eval_hom(phi, u) == expected);
  }
}
