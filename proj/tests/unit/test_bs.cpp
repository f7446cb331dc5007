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
#include <set>
#include <vector>

#include "catch_amalgamated.hpp"
#include "slender/bs.hpp"
#include "support.hpp"

using namespace slender;
using namespace slender::bs;
using slender::testing::seed_for;
using slender::testing::uniform;

namespace {

const Presentation kBs23(2, 3);
const Presentation kBs1m1(1, -1);

BsWord p(std::string_view text, const Presentation& pres = kBs23) {
  return parse_bs_word(text, pres);
}

bool is_normal_shape(const BsWord& w) {
  const auto& pres = w.presentation();
  BigInt am = abs(BigInt(pres.m()));
  BigInt an = abs(BigInt(pres.n()));
  auto t = w.tail();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const BigInt& k = t[i].exponent;
    if (k < 0 || k >= (t[i].epsilon > 0 ? an : am)) {
      return false;
    }
    // No pinch: the a-power between t^e and t^-e.
    if (i + 1 < t.size() && t[i].epsilon == -t[i + 1].epsilon) {
      const BigInt& d = t[i].epsilon < 0 ? am : an;
      if (k % d == 0) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("relator rewriting", "[bs]") {
  CHECK(bs_reduce(p("t^-1 a^2 t")) == p("a^3"));
  CHECK(bs_reduce(p("t a^3 t^-1")) == p("a^2"));
  CHECK(bs_reduce(p("t^-1 a^5 t")) == p("t^-1 a^5 t"));
  std::size_t pinches = 0;
  bs_reduce(p("t^-1 a^4 t t a^3 t^-1"), pinches);
  CHECK(pinches == 2);
}

TEST_CASE("normal form examples", "[bs]") {
  CHECK(bs_normal_form(p("t^-1 a^5 t")) == p("a^6 t^-1 a t"));
  CHECK(to_string(bs_normal_form(p("t^-1 a^5 t"))) == "a^6 t^-1 a t");
  CHECK(bs_normal_form(p("a t a t", kBs1m1)) == p("t^2", kBs1m1));
  for (int k = -20; k <= 20; ++k) {
    CHECK(bs_normal_form(BsWord::a_power(kBs23, k)) == BsWord::a_power(kBs23, k));
  }
  CHECK(bs_normal_form(p("t^-1 a^5 t")).status() == Status::normal);
  CHECK(to_string(BsWord(kBs23)) == "1");
}

TEST_CASE("equality examples", "[bs]") {
  CHECK(bs_equal(p("a t t^-1 a^-1"), BsWord(kBs23)));
  CHECK_FALSE(bs_equal(p("t^-1 a t"), BsWord(kBs23)));
  CHECK(bs_equal(bs_power(p("a^5 t", kBs1m1), 2), bs_power(p("a^-5 t", kBs1m1), 2)));
  CHECK_THROWS_AS(bs_equal(p("a"), p("a", kBs1m1)), PresentationMismatch);
  CHECK_THROWS_AS(Presentation(0, 3), BsError);
  CHECK_THROWS_AS(p("b"), word::UnknownGenerator);
}

TEST_CASE("length examples", "[bs]") {
  CHECK(bs_length(p("a^5")) == 0);
  CHECK(bs_length(p("t")) == 1);
  CHECK(bs_length(p("t^-1 a^2 t")) == 0);
  CHECK(bs_cyclic_length(p("a^7")) == 0);
  CHECK(bs_cyclic_length(p("a^3 t a^-3")) == 1);
  CHECK(bs_cyclic_length(p("t")) == 1);
  CHECK(bs_cyclic_length(p("t^-1")) == 1);
  CHECK(bs_cyclic_length(p("t a t^-1")) == 0);
}

TEST_CASE("power examples", "[bs]") {
  auto x = p("a^3 t^-1 a t^-1 a^-2");
  CHECK(bs_power(x, 1) == bs_normal_form(x));
  CHECK(bs_is_identity(bs_multiply(bs_power(x, -1), bs_power(x, 1))));
  for (int k = -10; k <= 10; ++k) {
    auto root = bs_multiply(BsWord::a_power(kBs1m1, k), BsWord::t_power(kBs1m1, 1));
    CHECK(bs_power(root, 2) == BsWord::t_power(kBs1m1, 2));
  }
}

TEST_CASE("root search examples", "[bs]") {
  auto a3 = BsWord::a_power(kBs23, 3);
  for (const auto& h : bs_find_roots(a3, 5, {2, 4})) {
    CHECK(h.t_count() == 0);
  }
  auto roots = bs_find_roots(BsWord::t_power(kBs1m1, 2), 2, {1, 3});
  std::vector<BsWord> expected;
  for (int k = -3; k <= 3; ++k) {
    expected.push_back(bs_normal_form(testing::raw_bs_concat(BsWord::a_power(kBs1m1, k),
                                                 BsWord::t_power(kBs1m1, 1))));
  }
  CHECK(std::set<BsWord>(roots.begin(), roots.end()) ==
        std::set<BsWord>(expected.begin(), expected.end()));
  auto g = p("t a t^-1 a^2");
  auto single = bs_find_roots(g, 1, {1, 1});
  REQUIRE(single.size() == 1);
  CHECK(bs_equal(single.front(), g));
  CHECK_THROWS_AS(bs_find_roots(g, 0, {1, 1}), BsError);
}

TEST_CASE("non-uniqueness of square roots in BS(1,-1) grows with the bound", "[bs]") {
  std::size_t previous = 0;
  for (int k = 1; k <= 5; ++k) {
    auto roots = bs_find_roots(BsWord::t_power(kBs1m1, 2), 2, {1, k});
    CHECK(roots.size() >= static_cast<std::size_t>(2 * k + 1));
    CHECK(roots.size() > previous);
    previous = roots.size();
  }
}

TEST_CASE("fifth roots in BS(2,3) are unique within the bound", "[bs]") {
  std::mt19937_64 rng(seed_for("bs.unique5"));
  for (int i = 0; i < 10; ++i) {
    auto h = bs_normal_form(testing::random_bs_word(rng, kBs23, 1, 3));
    auto roots = bs_find_roots(bs_power(h, 5), 5, {1, 3});
    CHECK(roots.size() <= 1);
  }
}

TEST_CASE("Frac and T", "[bs]") {
  std::vector<int> plus{+1};
  auto a = frac_T_check(plus, kBs23, 3);
  CHECK(a.t == Rational(3, 2));
  CHECK(a.sum == Rational(19, 4));
  CHECK(a.sum_nonzero);
  std::vector<int> pm{+1, -1};
  auto b = frac_T_check(pm, Presentation(5, 7), 3);
  CHECK(b.t == 1);
  CHECK(b.sum == 3);
  auto c = frac_T_check(plus, Presentation(4, -4), 3);
  CHECK(c.t == -1);
  CHECK(c.sum == 1);
  CHECK(c.sum_nonzero);
  CHECK(frac(-1, kBs23) == Rational(2, 3));
  CHECK_THROWS_AS(frac_T_check(plus, kBs23, 4), BsError);
}

TEST_CASE("normal forms agree with randomized rewriting", "[bs][property]") {
  std::mt19937_64 rng(seed_for("bs.oracle"));
  for (const auto& pres : {kBs23, kBs1m1, Presentation(-2, 4), Presentation(3, -2)}) {
    for (int i = 0; i < 2500; ++i) {
      auto u = testing::random_bs_word(rng, pres, static_cast<std::size_t>(uniform(rng, 0, 5)), 6);
      auto v = uniform(rng, 0, 1) ? testing::random_rewrite(u, rng, 4)
                                  : testing::random_bs_word(rng, pres, static_cast<std::size_t>(uniform(rng, 0, 5)), 6);
      bool oracle = testing::oracle_bs_trivial(testing::raw_bs_concat(u, testing::raw_bs_inverse(v)), rng);
      REQUIRE(bs_equal(u, v) == oracle);
      CHECK(is_normal_shape(bs_normal_form(u)));
    }
  }
}

TEST_CASE("Britton: nonempty reduced words are nontrivial", "[bs][property]") {
  std::mt19937_64 rng(seed_for("bs.britton"));
  for (int i = 0; i < 3000; ++i) {
    auto r = bs_reduce(testing::random_bs_word(rng, kBs23, static_cast<std::size_t>(uniform(rng, 0, 6)), 8));
    if (r.is_empty()) {
      continue;
    }
    CHECK_FALSE(bs_is_identity(r));
    CHECK_FALSE(testing::oracle_bs_trivial(r, rng));
  }
}

TEST_CASE("homomorphism and length laws", "[bs][property]") {
  std::mt19937_64 rng(seed_for("bs.laws"));
  for (int i = 0; i < 2000; ++i) {
    auto u = testing::random_bs_word(rng, kBs23, static_cast<std::size_t>(uniform(rng, 0, 4)), 6);
    auto v = testing::random_bs_word(rng, kBs23, static_cast<std::size_t>(uniform(rng, 0, 4)), 6);
    CHECK(bs_normal_form(testing::raw_bs_concat(u, v)) ==
          bs_normal_form(testing::raw_bs_concat(bs_normal_form(u), bs_normal_form(v))));
    CHECK(bs_multiply(u, v) == bs_normal_form(testing::raw_bs_concat(u, v)));
    CHECK(bs_length(u) == bs_length(bs_inverse(u)));
    CHECK(bs_length(bs_multiply(u, v)) <= bs_length(u) + bs_length(v));
    CHECK(bs_equal(bs_inverse(u), testing::raw_bs_inverse(u)));
    CHECK(parse_bs_word(to_string(bs_normal_form(u)), kBs23) == bs_normal_form(u));
  }
}

TEST_CASE("cyclic reduction is a conjugation", "[bs][property]") {
  std::mt19937_64 rng(seed_for("bs.cyclic"));
  for (int i = 0; i < 1000; ++i) {
    auto u = testing::random_bs_word(rng, kBs23, static_cast<std::size_t>(uniform(rng, 0, 5)), 5);
    auto [core, conj] = bs_cyclic_reduce(u);
    CHECK(bs_equal(bs_multiply(bs_multiply(conj, core), bs_inverse(conj)), u));
    CHECK(bs_cyclic_length(u) == core.t_count());
    CHECK(bs_cyclic_length(u) <= bs_length(u));
    if (core.t_count() > 0) {
      CHECK(bs_is_cyclically_reduced(core));
    }
    // Conjugation does not change the cyclic length.
    auto c = testing::random_bs_word(rng, kBs23, 2, 3);
    CHECK(bs_cyclic_length(bs_multiply(bs_multiply(c, u), bs_inverse(c))) == bs_cyclic_length(u));
  }
}
