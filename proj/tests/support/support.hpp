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

// Seeded generators and independent oracles shared by the unit and
// acceptance tests. Oracles here never call the library routine they check.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slender/bigint.hpp"
#include "slender/bs.hpp"
#include "slender/catalog.hpp"
#include "slender/earring.hpp"
#include "slender/thompson.hpp"
#include "slender/word.hpp"

namespace slender::testing {

/// SLENDER_SEED overrides the base seed; each suite mixes in its own name.
inline std::uint64_t seed_for(std::string_view name) {
  std::uint64_t base = 20261016;
  if (const char* env = std::getenv("SLENDER_SEED")) {
    base = std::strtoull(env, nullptr, 10);
  }
  return base ^ std::hash<std::string_view>{}(name);
}

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// ---------------------------------------------------------------------------
// Words

/// Unreduced word with `length` syllables over `bases`, exponents in
/// [-max_exp, max_exp] (zero allowed; the constructor drops it).
inline word::Word random_word(std::mt19937_64& rng, const word::AlphabetPtr& alphabet,
                              const std::vector<std::string>& bases, std::size_t length,
                              std::int64_t max_exp) {
  std::vector<word::Letter> letters;
  for (std::size_t i = 0; i < length; ++i) {
    letters.push_back({bases[static_cast<std::size_t>(uniform(rng, 0, bases.size() - 1))],
                       BigInt(uniform(rng, -max_exp, max_exp))});
  }
  return word::Word(alphabet, std::move(letters));
}

/// Letters a^{+-1} expanded one by one.
using Expanded = std::vector<std::pair<std::string, int>>;

inline Expanded expand(const word::Word& w) {
  Expanded out;
  for (const auto& letter : w.syllables()) {
    int sign = letter.exponent < 0 ? -1 : 1;
    for (BigInt i = 0; i < abs(letter.exponent); ++i) {
      out.emplace_back(letter.base, sign);
    }
  }
  return out;
}

/// Free reduction by cancelling a randomly chosen adjacent inverse pair
/// until none is left.
inline Expanded oracle_free_reduce(Expanded letters, std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if (letters[i].first == letters[i + 1].first &&
          letters[i].second == -letters[i + 1].second) {
        spots.push_back(i);
      }
    }
    if (spots.empty()) {
      return letters;
    }
    std::size_t i = spots[static_cast<std::size_t>(uniform(rng, 0, spots.size() - 1))];
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i),
                  letters.begin() + static_cast<std::ptrdiff_t>(i) + 2);
  }
}

inline word::Word random_reduced_free_word(std::mt19937_64& rng, const catalog::FreeGroup& g,
                                           std::size_t max_letters) {
  std::vector<std::string> bases;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    bases.emplace_back(1, static_cast<char>('a' + i));
  }
  auto length = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(max_letters)));
  return word::free_reduce(random_word(rng, g.alphabet(), bases, length, 1));
}

// ---------------------------------------------------------------------------
// Baumslag-Solitar

/// Raw word a^k0 t^e1 a^k1 ... with `t_letters` t-letters.
inline bs::BsWord random_bs_word(std::mt19937_64& rng, const bs::Presentation& pres,
                                 std::size_t t_letters, std::int64_t max_exp) {
  std::vector<bs::TSyllable> tail;
  for (std::size_t i = 0; i < t_letters; ++i) {
    tail.push_back({uniform(rng, 0, 1) == 0 ? -1 : 1, BigInt(uniform(rng, -max_exp, max_exp))});
  }
  return bs::BsWord(pres, BigInt(uniform(rng, -max_exp, max_exp)), std::move(tail));
}

/// A normal form with exactly `t_letters` t-letters that ends in a t-letter
/// and is cyclically reduced.
inline bs::BsWord random_cyclically_reduced(std::mt19937_64& rng, const bs::Presentation& pres,
                                            std::size_t t_letters, std::int64_t max_exp) {
  for (;;) {
    auto w = bs::bs_normal_form(random_bs_word(rng, pres, t_letters, max_exp));
    if (w.t_count() != t_letters || w.tail().back().exponent != 0) {
      continue;
    }
    if (bs::bs_is_cyclically_reduced(w)) {
      return w;
    }
  }
}

/// Syntactic concatenation, without any reduction.
inline bs::BsWord raw_bs_concat(const bs::BsWord& u, const bs::BsWord& v) {
  std::vector<bs::TSyllable> tail(u.tail().begin(), u.tail().end());
  if (tail.empty()) {
    std::vector<bs::TSyllable> vt(v.tail().begin(), v.tail().end());
    return bs::BsWord(u.presentation(), u.head() + v.head(), std::move(vt));
  }
  tail.back().exponent += v.head();
  tail.insert(tail.end(), v.tail().begin(), v.tail().end());
  return bs::BsWord(u.presentation(), u.head(), std::move(tail));
}

/// The formal inverse: syllables reversed with negated exponents.
inline bs::BsWord raw_bs_inverse(const bs::BsWord& w) {
  auto t = w.tail();
  if (t.empty()) {
    return bs::BsWord(w.presentation(), -w.head(), {});
  }
  std::vector<bs::TSyllable> tail;
  for (std::size_t i = t.size(); i-- > 0;) {
    tail.push_back({-t[i].epsilon, i == 0 ? BigInt(-w.head()) : BigInt(-t[i - 1].exponent)});
  }
  return bs::BsWord(w.presentation(), -t.back().exponent, std::move(tail));
}

/// Decides w = 1 in BS(m, n) by Britton reduction applied in random order:
/// merges of equal letters and pinches t^-1 a^(jm) t -> a^(jn),
/// t a^(jn) t^-1 -> a^(jm), until none applies. Trivial iff nothing is left.
inline bool oracle_bs_trivial(const bs::BsWord& w, std::mt19937_64& rng) {
  struct Syl {
    char letter;
    BigInt exp;
  };
  const BigInt m = w.presentation().m();
  const BigInt n = w.presentation().n();
  std::vector<Syl> s;
  s.push_back({'a', w.head()});
  for (const auto& t : w.tail()) {
    s.push_back({'t', BigInt(t.epsilon)});
    s.push_back({'a', t.exponent});
  }
  auto sign = [](const BigInt& x) { return x < 0 ? -1 : 1; };
  for (;;) {
    std::vector<std::pair<int, std::size_t>> moves;  // kind, position
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i].exp == 0) {
        moves.emplace_back(0, i);
      }
      if (i + 1 < s.size() && s[i].letter == s[i + 1].letter) {
        moves.emplace_back(1, i);
      }
      if (i + 2 < s.size() && s[i].letter == 't' && s[i + 1].letter == 'a' &&
          s[i + 2].letter == 't' && s[i].exp != 0 && s[i + 2].exp != 0 &&
          sign(s[i].exp) == -sign(s[i + 2].exp)) {
        const BigInt& k = s[i + 1].exp;
        bool inner_minus = sign(s[i].exp) < 0;  // t^-1 a^k t
        if ((inner_minus && k % m == 0) || (!inner_minus && k % n == 0)) {
          moves.emplace_back(2, i);
        }
      }
    }
    if (moves.empty()) {
      break;
    }
    auto [kind, i] = moves[static_cast<std::size_t>(uniform(rng, 0, moves.size() - 1))];
    auto at = s.begin() + static_cast<std::ptrdiff_t>(i);
    if (kind == 0) {
      s.erase(at);
    } else if (kind == 1) {
      s[i].exp += s[i + 1].exp;
      s.erase(at + 1);
    } else {
      int e = sign(s[i].exp);
      const BigInt k = s[i + 1].exp;
      BigInt replaced = e < 0 ? BigInt(k / m * n) : BigInt(k / n * m);
      s[i].exp -= e;
      s[i + 1].exp = replaced;
      s[i + 2].exp += e;
    }
  }
  return s.empty();
}

/// Random relator insertions, free insertions and letter splits that leave
/// the element unchanged.
inline bs::BsWord random_rewrite(const bs::BsWord& w, std::mt19937_64& rng, int steps) {
  const auto& pres = w.presentation();
  auto word = bs::to_word(w);
  const auto& alphabet = word.alphabet();
  std::vector<word::Letter> letters(word.syllables().begin(), word.syllables().end());
  for (int s = 0; s < steps; ++s) {
    auto pos = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(letters.size())));
    std::vector<word::Letter> insert;
    BigInt j = uniform(rng, -2, 2);
    switch (uniform(rng, 0, 3)) {
      case 0:  // t^-1 a^(jm) t a^(-jn)
        insert = {{"t", -1}, {"a", j * pres.m()}, {"t", 1}, {"a", -j * pres.n()}};
        break;
      case 1:  // a^(jm) t a^(-jn) t^-1, the conjugated relator
        insert = {{"a", j * pres.m()}, {"t", 1}, {"a", -j * pres.n()}, {"t", -1}};
        break;
      case 2: {  // x x^-1
        std::string base = uniform(rng, 0, 1) ? "a" : "t";
        insert = {{base, j == 0 ? BigInt(1) : j}, {base, j == 0 ? BigInt(-1) : BigInt(-j)}};
        break;
      }
      default:  // split the letter at pos
        if (pos < letters.size() && abs(letters[pos].exponent) > 1) {
          BigInt e = letters[pos].exponent;
          BigInt part = e > 0 ? BigInt(1) : BigInt(-1);
          letters[pos].exponent = e - part;
          insert = {{letters[pos].base, part}};
        }
        break;
    }
    letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(pos), insert.begin(),
                   insert.end());
  }
  return bs::from_word(word::Word(alphabet, std::move(letters)), pres);
}

// ---------------------------------------------------------------------------
// Thompson's F

/// Evaluates the piecewise-linear map through its breakpoints by rational
/// interpolation.
inline Rational oracle_pl_eval(const thompson::PLMap& f, const Rational& x) {
  auto pts = f.breakpoints();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Rational x0 = pts[i].x.to_rational();
    Rational x1 = pts[i + 1].x.to_rational();
    if (x >= x0 && x <= x1) {
      Rational y0 = pts[i].y.to_rational();
      Rational y1 = pts[i + 1].y.to_rational();
      return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
    }
  }
  throw std::out_of_range("point outside [0, 1]");
}

inline Rational random_dyadic_point(std::mt19937_64& rng, int max_exp = 10) {
  std::int64_t e = uniform(rng, 0, max_exp);
  std::int64_t den = std::int64_t{1} << e;
  return Rational(BigInt(uniform(rng, 0, den)), BigInt(den));
}

/// A random product of x0^{+-1}, x1^{+-1}, x2^{+-1} with up to `length`
/// factors.
inline thompson::PLMap random_pl_map(std::mt19937_64& rng, std::size_t length) {
  static const std::vector<thompson::PLMap> gens = [] {
    std::vector<thompson::PLMap> g;
    for (std::uint64_t i = 0; i < 3; ++i) {
      g.push_back(thompson::generator(i));
      g.push_back(thompson::pl_invert(thompson::generator(i)));
    }
    return g;
  }();
  thompson::PLMap f;
  auto count = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(length)));
  for (std::size_t i = 0; i < count; ++i) {
    f = thompson::pl_multiply(f, gens[static_cast<std::size_t>(uniform(rng, 0, 5))]);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Free products

/// Normalizes by merging or dropping at randomly chosen spots until the
/// sequence alternates without identities.
inline catalog::FreeProductElement oracle_fprod_merge(const catalog::FreeProductGroup& g,
                                                      std::vector<catalog::FreeProductSyllable> s,
                                                      std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::pair<int, std::size_t>> moves;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i].value == g.factor(s[i].factor).identity()) {
        moves.emplace_back(0, i);
      }
      if (i + 1 < s.size() && s[i].factor == s[i + 1].factor) {
        moves.emplace_back(1, i);
      }
    }
    if (moves.empty()) {
      return catalog::FreeProductElement{std::move(s)};
    }
    auto [kind, i] = moves[static_cast<std::size_t>(uniform(rng, 0, moves.size() - 1))];
    if (kind == 0) {
      s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      s[i].value = g.factor(s[i].factor).multiply(s[i].value, s[i + 1].value);
      s.erase(s.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    }
  }
}

/// The factor list zinv(2), zinv(3), free(2) used by the support and free
/// product checks.
inline std::vector<catalog::AnyGroup> mixed_factors() {
  return {catalog::AnyGroup(catalog::ZInvMGroup(2)), catalog::AnyGroup(catalog::ZInvMGroup(3)),
          catalog::AnyGroup(catalog::FreeGroup(2))};
}

/// A small random element of factor `index` of mixed_factors(); may be the
/// identity.
inline catalog::AnyElement random_mixed_element(std::mt19937_64& rng, std::size_t index) {
  switch (index) {
    case 0:
    case 1: {
      BigInt den = slender::pow(index == 0 ? 2 : 3, static_cast<std::uint64_t>(uniform(rng, 0, 3)));
      return catalog::AnyElement(catalog::ZInvMElement{Rational(BigInt(uniform(rng, -8, 8)), den)});
    }
    default: {
      static const catalog::FreeGroup f2(2);
      return catalog::AnyElement(random_reduced_free_word(rng, f2, 5));
    }
  }
}

/// Random raw syllables over mixed_factors(), identities included.
inline std::vector<catalog::FreeProductSyllable> random_syllables(std::mt19937_64& rng,
                                                                  std::size_t count) {
  std::vector<catalog::FreeProductSyllable> raw;
  for (std::size_t i = 0; i < count; ++i) {
    auto f = static_cast<std::size_t>(uniform(rng, 0, 2));
    raw.push_back({f, random_mixed_element(rng, f)});
  }
  return raw;
}

/// Two elements of the direct sum over mixed_factors() whose supports are
/// disjoint: each factor goes to u, to v or to neither.
inline std::pair<catalog::DirectSumElement, catalog::DirectSumElement> random_disjoint_pair(
    std::mt19937_64& rng, const catalog::DirectSumGroup& g) {
  catalog::DirectSumElement u;
  catalog::DirectSumElement v;
  for (std::size_t f = 0; f < 3; ++f) {
    auto side = uniform(rng, 0, 2);
    auto value = g.inject(f, random_mixed_element(rng, f));
    if (side == 1) {
      u = g.multiply(u, value);
    } else if (side == 2) {
      v = g.multiply(v, value);
    }
  }
  return {u, v};
}

// ---------------------------------------------------------------------------
// Earring

inline word::Word random_earring_letters(std::mt19937_64& rng, std::uint64_t max_index,
                                         std::size_t length, std::int64_t max_exp = 2) {
  std::vector<word::Letter> letters;
  for (std::size_t i = 0; i < length; ++i) {
    letters.push_back({word::indexed_name("a", static_cast<std::uint64_t>(uniform(
                                                   rng, 1, static_cast<std::int64_t>(max_index)))),
                       BigInt(uniform(rng, -max_exp, max_exp))});
  }
  return word::Word(earring::earring_alphabet(), std::move(letters));
}

inline earring::TruncatedEarringWord random_earring_word(std::mt19937_64& rng,
                                                         std::uint64_t depth, std::size_t length) {
  return earring::from_word(random_earring_letters(rng, depth + 2, length), depth);
}

/// Level N of a finite word: delete letters of index > N, then reduce.
inline word::Word oracle_earring_level(const word::Word& w, std::uint64_t n) {
  return word::restrict_letters(
      w, [n](std::string_view base) { return *word::generator_index(base) <= n; });
}

/// U_0 = W_1 (W_2 ( ... )^{m_2})^{m_1} as one finite word, built outward
/// from W_depth.
inline word::Word oracle_diag_word(const std::vector<word::Word>& w, const std::vector<BigInt>& m,
                                   std::uint64_t depth) {
  word::Word u(earring::earring_alphabet());
  for (std::uint64_t i = depth; i >= 1; --i) {
    word::Word wi = i <= w.size() ? w[i - 1] : word::Word(earring::earring_alphabet());
    u = word::fg_multiply(wi, word::fg_power(u, m[i - 1]));
  }
  return u;
}

/// Random W_1, ..., W_depth with W_i over indices in (i, depth], possibly
/// empty.
inline std::vector<word::Word> random_diag_words(std::mt19937_64& rng, std::uint64_t depth) {
  std::vector<word::Word> out;
  for (std::uint64_t i = 1; i <= depth; ++i) {
    std::vector<word::Letter> letters;
    if (i < depth) {
      auto len = uniform(rng, 0, 3);
      for (std::int64_t j = 0; j < len; ++j) {
        auto idx = static_cast<std::uint64_t>(uniform(rng, static_cast<std::int64_t>(i) + 1,
                                                      static_cast<std::int64_t>(depth)));
        letters.push_back({word::indexed_name("a", idx), BigInt(uniform(rng, -2, 2))});
      }
    }
    out.emplace_back(earring::earring_alphabet(), std::move(letters));
  }
  return out;
}

}  // namespace slender::testing
