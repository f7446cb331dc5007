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

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "catch_amalgamated.hpp"
#include "slender/catalog.hpp"
#include "slender/config.hpp"
#include "support.hpp"

using namespace slender;
using namespace slender::catalog;
using slender::testing::seed_for;
using slender::testing::uniform;

namespace {

ZInvMElement zq(long p, long q) { return {Rational(p, q)}; }

// h with k^n h = g in Z[1/m], found by dividing until the denominator picks
// up a prime outside m.
std::set<Rational> oracle_zinv_antecedents(const Rational& g, long k, const ZInvMGroup& grp) {
  std::set<Rational> out;
  Rational h = g;
  for (int n = 0; n < 64; ++n) {
    if (!grp.admits(h)) {
      break;
    }
    out.insert(h);
    if (h == 0) {
      break;
    }
    h /= k;
  }
  return out;
}

}  // namespace

TEST_CASE("antecedent examples", "[catalog]") {
  ZInvMGroup z2(2);
  auto a = antecedents(z2, zq(9, 1), 3);
  CHECK(a.complete);
  CHECK(a.elements == std::vector<ZInvMElement>{zq(1, 1), zq(3, 1), zq(9, 1)});
  IntegerGroup z;
  auto b = antecedents(z, BigInt(8), 2);
  CHECK(b.elements == std::vector<BigInt>{1, 2, 4, 8});
  CHECK(antecedents(z, BigInt(0), 5).elements == std::vector<BigInt>{0});
  FreeGroup f2(2);
  CHECK(antecedents(f2, f2.identity(), 2).elements == std::vector<word::Word>{f2.identity()});
  auto c = antecedents(f2, f2.parse("a^8"), 2);
  CHECK(c.elements.size() == 4);
}

TEST_CASE("antecedent divergence is reported with a chain", "[catalog]") {
  // In Z[1/2] every element has a square root, so 2-antecedents never stop.
  ZInvMGroup z2(2);
  try {
    antecedents(z2, zq(1, 1), 2, AntecedentLimits{20, 1000});
    FAIL("expected divergence");
  } catch (const AntecedentDivergence& e) {
    REQUIRE(e.chain().size() >= 3);
    CHECK(e.chain()[0] == "1");
    CHECK(e.chain()[1] == "1/2");
    CHECK(e.chain()[2] == "1/4");
  }
  ThompsonGroup f;
  CHECK_THROWS_AS(antecedents(AnyGroup(f), AnyElement(f.identity()), 2), Unsupported);
}

TEST_CASE("p-antecedents terminate in Z[1/m] for primes p > m", "[catalog][property]") {
  std::mt19937_64 rng(seed_for("catalog.antecedents"));
  const std::vector<std::pair<std::uint64_t, long>> cases{{2, 3}, {3, 5}, {6, 7}};
  for (auto [m, p] : cases) {
    ZInvMGroup grp(m);
    for (int i = 0; i < 100; ++i) {
      BigInt num = uniform(rng, -500, 500);
      num *= slender::pow(BigInt(p), static_cast<std::uint64_t>(uniform(rng, 0, 3)));
      Rational v(num, slender::pow(BigInt(m), static_cast<std::uint64_t>(uniform(rng, 0, 3))));
      auto ant = antecedents(grp, grp.make(v), p);
      std::set<Rational> got;
      for (const auto& h : ant.elements) {
        got.insert(h.value);
      }
      CHECK(got == oracle_zinv_antecedents(v, p, grp));
      // Closure: roots of members stay inside.
      for (const auto& h : ant.elements) {
        for (const auto& r : grp.roots(h, p).roots) {
          CHECK(std::binary_search(ant.elements.begin(), ant.elements.end(), r));
        }
      }
    }
  }
}

TEST_CASE("Z[1/m] membership and roots", "[catalog]") {
  ZInvMGroup z6(6);
  CHECK(z6.admits(Rational(5, 36)));
  CHECK(z6.admits(Rational(1, 8)));
  CHECK_FALSE(z6.admits(Rational(1, 5)));
  CHECK_THROWS_AS(z6.make(Rational(1, 5)), CatalogError);
  CHECK(z6.roots(zq(1, 1), 3).roots == std::vector<ZInvMElement>{zq(1, 3)});
  CHECK(z6.roots(zq(1, 1), 5).roots.empty());
  CHECK(z6.parse("-7/12") == zq(-7, 12));
  auto e = ZInvMGroup(2).enumerate(6);
  CHECK(e.front() == zq(0, 1));
  CHECK(std::set<ZInvMElement>(e.begin(), e.end()).size() == e.size());
}

TEST_CASE("direct sums and support", "[catalog]") {
  DirectSumGroup g(testing::mixed_factors());
  auto x = g.inject(0, AnyElement(zq(3, 2)));
  auto y = g.inject(2, AnyElement(FreeGroup(2).parse("a b")));
  CHECK(dsum_multiply(g, x, g.identity()) == x);
  CHECK(supp(g.identity()).empty());
  CHECK(supp(x) == std::vector<std::size_t>{0});
  CHECK(supp(dsum_multiply(g, x, y)) == std::vector<std::size_t>{0, 2});
  CHECK(supp(dsum_multiply(g, x, g.inverse(x))).empty());
  CHECK(supp(g.inject(1, AnyElement(zq(0, 1)))).empty());
  CHECK(g.format(dsum_multiply(g, x, y)) == "{0: 3/2; 2: a b}");
  CHECK(g.parse("{0: 3/2; 2: a b}") == dsum_multiply(g, x, y));
  CHECK(g.parse("{}") == g.identity());
  CHECK(g.project(x, 1) == AnyElement(zq(0, 1)));
  CHECK_THROWS_AS(g.factor(3), FactorMismatch);
  CHECK_THROWS_AS(g.inject(0, AnyElement(BigInt(1))), FactorMismatch);

  auto family = zinv_family_sum();
  CHECK_FALSE(family.factor_count().has_value());
  auto big = family.inject(1000, AnyElement(zq(1, 1000)));
  CHECK(supp(big) == std::vector<std::size_t>{1000});
  CHECK_THROWS_AS(family.factor(0), FactorMismatch);
}

TEST_CASE("support of disjoint products is the disjoint union", "[catalog][property]") {
  std::mt19937_64 rng(seed_for("catalog.supp"));
  DirectSumGroup g(testing::mixed_factors());
  for (int i = 0; i < 1000; ++i) {
    auto [u, v] = testing::random_disjoint_pair(rng, g);
    auto su = supp(u);
    auto sv = supp(v);
    std::vector<std::size_t> both;
    std::set_union(su.begin(), su.end(), sv.begin(), sv.end(), std::back_inserter(both));
    CHECK(supp(dsum_multiply(g, u, v)) == both);
    CHECK(su.size() + sv.size() == both.size());
  }
}

TEST_CASE("free product normal form examples", "[catalog]") {
  FreeProductGroup g(testing::mixed_factors());
  AnyElement x(zq(1, 2));
  AnyElement xi(zq(-1, 2));
  CHECK(fprod_normal_form(g, {{0, x}, {0, xi}}) == g.identity());
  AnyElement y(FreeGroup(2).parse("a"));
  AnyElement yi(FreeGroup(2).parse("a^-1"));
  AnyElement z(zq(3, 4));
  auto merged = fprod_normal_form(g, {{0, x}, {2, y}, {2, yi}, {0, z}});
  REQUIRE(merged.syllables.size() == 1);
  CHECK(merged.syllables[0].factor == 0);
  CHECK(merged.syllables[0].value == AnyElement(zq(5, 4)));
  std::vector<FreeProductSyllable> alternating{{0, x}, {1, AnyElement(zq(1, 3))}, {2, y}};
  CHECK(fprod_normal_form(g, alternating).syllables == alternating);
  auto e = g.multiply(FreeProductElement{alternating}, g.identity());
  CHECK(g.format(e) == "[0: 1/2][1: 1/3][2: a]");
  CHECK(g.parse("[0: 1/2][1: 1/3][2: a]") == e);
  CHECK(g.format(g.identity()) == "[]");
  CHECK(g.parse("[]") == g.identity());
}

TEST_CASE("free product normal form is canonical", "[catalog][property]") {
  std::mt19937_64 rng(seed_for("catalog.fprod"));
  FreeProductGroup g(testing::mixed_factors());
  for (int i = 0; i < 1000; ++i) {
    auto raw = testing::random_syllables(rng, static_cast<std::size_t>(uniform(rng, 0, 8)));
    auto nf = fprod_normal_form(g, raw);
    CHECK(nf == testing::oracle_fprod_merge(g, raw, rng));
    // A product with its inverse collapses; products are associative.
    CHECK(g.multiply(nf, g.inverse(nf)) == g.identity());
    auto other = fprod_normal_form(g, testing::random_syllables(rng, 4));
    auto third = fprod_normal_form(g, testing::random_syllables(rng, 4));
    CHECK(g.multiply(g.multiply(nf, other), third) == g.multiply(nf, g.multiply(other, third)));
    CHECK(g.parse(g.format(nf)) == nf);
  }
}

TEST_CASE("balls", "[catalog]") {
  IntegerGroup z;
  auto b3 = ball(z, 3);
  REQUIRE(b3.enumerable());
  CHECK(b3.elements() == std::vector<BigInt>{-3, -2, -1, 0, 1, 2, 3});
  CHECK(b3.contains(BigInt(-3)));
  CHECK_FALSE(b3.contains(BigInt(4)));
  CHECK(ball(z, 0).elements() == std::vector<BigInt>{0});
  FreeGroup f2(2);
  auto b1 = ball(f2, 1);
  std::vector<word::Word> expected{f2.identity(), f2.parse("a"), f2.parse("a^-1"), f2.parse("b"),
                                   f2.parse("b^-1")};
  std::sort(expected.begin(), expected.end());
  CHECK(b1.elements() == expected);
  CHECK(ball(f2, 3).elements().size() == 1 + 4 + 12 + 36);
  FreeAbelianGroup z2(2);
  CHECK(ball(z2, 2).elements().size() == 13);
  auto predicate_only = ball(word::word_length_function(), 2);
  CHECK_FALSE(predicate_only.enumerable());
  CHECK(predicate_only.contains(f2.parse("a b")));
}

TEST_CASE("enumerations start at the identity and do not repeat", "[catalog]") {
  auto check = [](const AnyGroup& g) {
    auto e = g.enumerate(60);
    REQUIRE(e.size() == 60);
    CHECK(e.front() == g.identity());
    CHECK(std::set<AnyElement>(e.begin(), e.end()).size() == e.size());
  };
  check(AnyGroup(IntegerGroup()));
  check(AnyGroup(FreeAbelianGroup(2)));
  check(AnyGroup(ZInvMGroup(3)));
  check(AnyGroup(FreeGroup(2)));
  check(AnyGroup(BsGroup(bs::Presentation(2, 3))));
  CHECK(IntegerGroup().enumerate(5) == std::vector<BigInt>{0, 1, -1, 2, -2});
}

TEST_CASE("type-erased groups", "[catalog]") {
  AnyGroup z(IntegerGroup{});
  auto x = z.parse("5");
  CHECK(z.format(z.multiply(x, z.inverse(z.parse("2")))) == "3");
  CHECK(z.has_roots());
  CHECK(z.has_ball());
  AnyGroup f(ThompsonGroup{});
  CHECK_FALSE(f.has_roots());
  CHECK_FALSE(f.has_length());
  CHECK_THROWS_AS(f.roots(f.identity(), 2), Unsupported);
  CHECK_THROWS_AS(z.multiply(x, f.identity()), FactorMismatch);
  CHECK(z.target<IntegerGroup>() != nullptr);
  CHECK(z.target<FreeGroup>() == nullptr);
  AnyGroup bs(BsGroup(bs::Presentation(2, 3)));
  CHECK(bs.name() == "bs(2,3)");
  CHECK(bs.format(bs.parse("t^-1 a^5 t")) == "a^6 t^-1 a t");
}

TEST_CASE("Baumslag-Solitar roots", "[catalog]") {
  BsGroup g(bs::Presentation(2, 3));
  auto a10 = g.parse("a^10");
  auto r = g.roots(a10, 5);
  CHECK(r.complete);
  CHECK(r.roots == std::vector<bs::BsWord>{g.parse("a^2")});
  CHECK(g.roots(g.parse("a^7"), 5).roots.empty());
  // Cyclic length 2 is not divisible by 3.
  auto w = g.parse("t a t a");
  auto none = g.roots(w, 3);
  CHECK(none.complete);
  CHECK(none.roots.empty());
  auto sq = g.roots(w, 2);
  REQUIRE(sq.roots.size() == 1);
  CHECK(g.multiply(sq.roots[0], sq.roots[0]) == w);
  auto c = g.roots(g.parse("t a t^-1 a"), 4);
  for (const auto& h : c.roots) {
    CHECK(power(g, h, BigInt(4)) == g.parse("t a t^-1 a"));
  }
}

TEST_CASE("group specifications", "[catalog]") {
  using config::make_group;
  CHECK(make_group("z").name() == "z");
  CHECK(make_group("z(1)").name() == "z");
  CHECK(make_group("z(3)").name() == "z(3)");
  CHECK(make_group("zinv(2)").name() == "zinv(2)");
  CHECK(make_group("free(2)").name() == "free(2)");
  CHECK(make_group("bs(2, 3)").name() == "bs(2,3)");
  CHECK(make_group("thompson").name() == "thompson");
  auto ds = make_group("direct-sum of {zinv(2), zinv(3)}");
  CHECK(ds.format(ds.parse("{1: 1/3; 0: 1/2}")) == "{0: 1/2; 1: 1/3}");
  auto fp = make_group("free-product of {free(2), z(1)}");
  CHECK(fp.format(fp.parse("[0: a][1: 2][1: -2][0: b]")) == "[0: a b]");
  CHECK_THROWS_AS(make_group("bogus"), config::ConfigError);
  CHECK_THROWS_AS(make_group("bs(0, 3)"), std::invalid_argument);
  CHECK_THROWS_AS(make_group("direct-sum of {z"), config::ConfigError);
}
