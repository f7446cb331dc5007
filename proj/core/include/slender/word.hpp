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

// Words over a declared alphabet, stored as merged syllables base^exponent,
// together with free reduction and free-group arithmetic. Every other module
// builds on these types.

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "slender/bigint.hpp"

namespace slender::word {

class WordError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownGenerator : public WordError {
 public:
  using WordError::WordError;
};

class AlphabetMismatch : public WordError {
 public:
  using WordError::WordError;
};

/// A generator set: a finite list of names plus any number of indexed
/// families. The family "a" admits the generators a_1, a_2, ...
class Alphabet {
 public:
  Alphabet(std::set<std::string> names, std::set<std::string> families);

  bool contains(std::string_view base) const;
  const std::set<std::string>& names() const { return names_; }
  const std::set<std::string>& families() const { return families_; }
  std::string describe() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::set<std::string> names_;
  std::set<std::string> families_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::initializer_list<std::string> names);
AlphabetPtr make_alphabet(std::vector<std::string> names);
AlphabetPtr make_indexed_alphabet(std::string family);

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

/// The index of an indexed generator name: "a_7" -> 7.
std::optional<std::uint64_t> generator_index(std::string_view base);
std::string indexed_name(std::string_view family, std::uint64_t index);

struct Letter {
  std::string base;
  BigInt exponent;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend std::strong_ordering operator<=>(const Letter& a, const Letter& b);
};

class Word {
 public:
  explicit Word(AlphabetPtr alphabet);
  /// Zero-exponent syllables are dropped; unknown bases throw UnknownGenerator.
  Word(AlphabetPtr alphabet, std::vector<Letter> syllables);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::span<const Letter> syllables() const { return syllables_; }
  std::size_t size() const { return syllables_.size(); }
  bool empty() const { return syllables_.empty(); }

  /// No two adjacent syllables share a base.
  bool is_reduced() const { return reduced_; }

  friend bool operator==(const Word& a, const Word& b) {
    return a.syllables_ == b.syllables_;
  }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  struct Trusted {};
  Word(AlphabetPtr alphabet, std::vector<Letter> syllables, Trusted);

  friend Word free_reduce(const Word& w);
  friend Word invert(const Word& w);

  AlphabetPtr alphabet_;
  std::vector<Letter> syllables_;
  bool reduced_ = true;
};

Word free_reduce(const Word& w);
Word invert(const Word& w);

/// Concatenation followed by free reduction. Throws AlphabetMismatch.
Word fg_multiply(const Word& u, const Word& v);

/// q-th power in the free group, computed through the cyclic core.
Word fg_power(const Word& w, const BigInt& q);

struct CyclicReduction {
  Word core;
  Word conjugator;
};

/// Writes a reduced word as conjugator * core * conjugator^-1 with the core
/// cyclically reduced (first and last syllables have different bases, or the
/// core has at most one syllable).
CyclicReduction fg_cyclic_reduce(const Word& w);

/// All q-th roots of w in the free group (at most one for q != 0).
std::optional<Word> fg_root(const Word& w, const BigInt& q);

/// Deletes every syllable whose base fails `keep`, then freely reduces.
Word restrict_letters(const Word& w, const std::function<bool(std::string_view)>& keep);

/// Whitespace separated syllables `base` or `base^exp`; `1` denotes the
/// identity.
Word parse_word(std::string_view text, const AlphabetPtr& alphabet);

/// Minimal form: `a` rather than `a^1`; the empty word prints as `1`.
std::string to_string(const Word& w);

/// Sum of |exponent| over the freely reduced form.
BigInt word_length(const Word& w);

enum class LengthKind { plain, dudley, uniformly_monotone };

template <class E>
struct LengthFunction {
  std::function<BigInt(const E&)> evaluate;
  LengthKind kind = LengthKind::plain;
  // k in l(g^k) >= l(g) + 1; meaningful for uniformly_monotone only.
  std::uint64_t monotone_constant = 0;

  BigInt operator()(const E& x) const { return evaluate(x); }
};

LengthFunction<Word> word_length_function(LengthKind kind = LengthKind::dudley,
                                          std::uint64_t monotone_constant = 0);

}  // namespace slender::word
