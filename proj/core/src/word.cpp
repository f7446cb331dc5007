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

#include "slender/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace slender::word {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0;
  });
}

// Splits "a_7" into ("a", "7"); returns nullopt when there is no index part.
std::optional<std::pair<std::string_view, std::string_view>> split_indexed(
    std::string_view base) {
  auto underscore = base.rfind('_');
  if (underscore == std::string_view::npos || underscore == 0 ||
      underscore + 1 == base.size()) {
    return std::nullopt;
  }
  auto family = base.substr(0, underscore);
  auto digits = base.substr(underscore + 1);
  if (!is_identifier(family) ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; })) {
    return std::nullopt;
  }
  return std::make_pair(family, digits);
}

bool valid_base_syntax(std::string_view base) {
  return is_identifier(base) || split_indexed(base).has_value();
}

int compare_bigint(const BigInt& a, const BigInt& b) { return a.compare(b); }

}  // namespace

Alphabet::Alphabet(std::set<std::string> names, std::set<std::string> families)
    : names_(std::move(names)), families_(std::move(families)) {
  for (const auto& n : names_) {
    if (!valid_base_syntax(n)) {
      throw WordError("invalid generator name '" + n + "'");
    }
  }
  for (const auto& f : families_) {
    if (!is_identifier(f)) {
      throw WordError("invalid generator family '" + f + "'");
    }
  }
}

bool Alphabet::contains(std::string_view base) const {
  if (names_.find(std::string(base)) != names_.end()) {
    return true;
  }
  if (families_.empty()) {
    return false;
  }
  auto parts = split_indexed(base);
  if (!parts) {
    return false;
  }
  auto index = generator_index(base);
  return index && *index >= 1 && families_.count(std::string(parts->first)) != 0;
}

std::string Alphabet::describe() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& n : names_) {
    out << (first ? "" : ", ") << n;
    first = false;
  }
  for (const auto& f : families_) {
    out << (first ? "" : ", ") << f << "_1, " << f << "_2, ...";
    first = false;
  }
  out << '}';
  return out.str();
}

AlphabetPtr make_alphabet(std::initializer_list<std::string> names) {
  return make_alphabet(std::vector<std::string>(names));
}

AlphabetPtr make_alphabet(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(
      std::set<std::string>(names.begin(), names.end()), std::set<std::string>{});
}

AlphabetPtr make_indexed_alphabet(std::string family) {
  return std::make_shared<const Alphabet>(std::set<std::string>{},
                                          std::set<std::string>{std::move(family)});
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

std::optional<std::uint64_t> generator_index(std::string_view base) {
  auto parts = split_indexed(base);
  if (!parts || parts->second.size() > 18) {
    return std::nullopt;
  }
  std::uint64_t value = 0;
  for (char c : parts->second) {
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return value;
}

std::string indexed_name(std::string_view family, std::uint64_t index) {
  return std::string(family) + "_" + std::to_string(index);
}

std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
  if (auto c = a.base <=> b.base; c != 0) {
    return c;
  }
  return compare_bigint(a.exponent, b.exponent) <=> 0;
}

Word::Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) {
    throw WordError("word requires an alphabet");
  }
}

Word::Word(AlphabetPtr alphabet, std::vector<Letter> syllables)
    : Word(std::move(alphabet)) {
  syllables_.reserve(syllables.size());
  for (auto& letter : syllables) {
    if (!alphabet_->contains(letter.base)) {
      throw UnknownGenerator("generator '" + letter.base + "' is not in alphabet " +
                             alphabet_->describe());
    }
    if (letter.exponent == 0) {
      continue;
    }
    if (!syllables_.empty() && syllables_.back().base == letter.base) {
      reduced_ = false;
    }
    syllables_.push_back(std::move(letter));
  }
}

Word::Word(AlphabetPtr alphabet, std::vector<Letter> syllables, Trusted)
    : alphabet_(std::move(alphabet)), syllables_(std::move(syllables)) {
  for (std::size_t i = 1; i < syllables_.size(); ++i) {
    if (syllables_[i].base == syllables_[i - 1].base) {
      reduced_ = false;
      break;
    }
  }
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  return std::lexicographical_compare_three_way(a.syllables_.begin(), a.syllables_.end(),
                                                b.syllables_.begin(), b.syllables_.end());
}

Word free_reduce(const Word& w) {
  if (w.is_reduced()) {
    return w;
  }
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const auto& letter : w.syllables_) {
    if (!stack.empty() && stack.back().base == letter.base) {
      stack.back().exponent += letter.exponent;
      if (stack.back().exponent == 0) {
        stack.pop_back();
      }
    } else {
      stack.push_back(letter);
    }
  }
  return Word(w.alphabet_, std::move(stack), Word::Trusted{});
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.syllables_.rbegin(); it != w.syllables_.rend(); ++it) {
    out.push_back({it->base, -it->exponent});
  }
  return Word(w.alphabet_, std::move(out), Word::Trusted{});
}

Word fg_multiply(const Word& u, const Word& v) {
  if (!same_alphabet(u.alphabet(), v.alphabet())) {
    throw AlphabetMismatch("cannot multiply words over " + u.alphabet()->describe() +
                           " and " + v.alphabet()->describe());
  }
  auto lhs = u.syllables();
  auto rhs = v.syllables();
  std::vector<Letter> joined(lhs.begin(), lhs.end());
  joined.insert(joined.end(), rhs.begin(), rhs.end());
  return free_reduce(Word(u.alphabet(), std::move(joined)));
}

CyclicReduction fg_cyclic_reduce(const Word& w) {
  Word reduced = free_reduce(w);
  auto syl = reduced.syllables();
  std::size_t lo = 0;
  std::size_t hi = syl.size();
  std::vector<Letter> conjugator;
  std::vector<Letter> core;
  bool merged_ends = false;
  while (hi - lo >= 2 && syl[lo].base == syl[hi - 1].base) {
    conjugator.push_back(syl[lo]);
    BigInt sum = syl[lo].exponent + syl[hi - 1].exponent;
    if (sum == 0) {
      ++lo;
      --hi;
      continue;
    }
    // a^e1 X a^e2 = a^e1 (X a^(e1+e2)) a^-e1
    core.assign(syl.begin() + static_cast<std::ptrdiff_t>(lo + 1),
                syl.begin() + static_cast<std::ptrdiff_t>(hi - 1));
    core.push_back({syl[lo].base, std::move(sum)});
    merged_ends = true;
    break;
  }
  if (!merged_ends) {
    core.assign(syl.begin() + static_cast<std::ptrdiff_t>(lo),
                syl.begin() + static_cast<std::ptrdiff_t>(hi));
  }
  return {Word(reduced.alphabet(), std::move(core)),
          Word(reduced.alphabet(), std::move(conjugator))};
}

Word fg_power(const Word& w, const BigInt& q) {
  if (q == 0) {
    return Word(w.alphabet());
  }
  if (q < 0) {
    return fg_power(invert(w), -q);
  }
  auto [core, conjugator] = fg_cyclic_reduce(w);
  if (core.empty()) {
    return core;
  }
  std::vector<Letter> body;
  if (core.size() == 1) {
    body.push_back({core.syllables()[0].base, core.syllables()[0].exponent * q});
  } else {
    std::uint64_t times = to_uint64(q);
    auto syl = core.syllables();
    body.reserve(syl.size() * times);
    for (std::uint64_t i = 0; i < times; ++i) {
      body.insert(body.end(), syl.begin(), syl.end());
    }
  }
  Word middle(w.alphabet(), std::move(body));
  return fg_multiply(fg_multiply(conjugator, middle), invert(conjugator));
}

std::optional<Word> fg_root(const Word& w, const BigInt& q) {
  if (q == 0) {
    throw WordError("fg_root: the 0-th root is undefined");
  }
  if (q < 0) {
    return fg_root(invert(w), -q);
  }
  auto [core, conjugator] = fg_cyclic_reduce(w);
  if (core.empty()) {
    return core;
  }
  auto syl = core.syllables();
  std::vector<Letter> root;
  if (syl.size() == 1) {
    if (!divides(q, syl[0].exponent)) {
      return std::nullopt;
    }
    root.push_back({syl[0].base, syl[0].exponent / q});
  } else {
    // A cyclically reduced q-th power with distinct end bases is exactly q
    // copies of its root's syllables.
    if (q > syl.size() || syl.size() % q.convert_to<std::size_t>() != 0) {
      return std::nullopt;
    }
    std::size_t period = syl.size() / q.convert_to<std::size_t>();
    for (std::size_t i = period; i < syl.size(); ++i) {
      if (syl[i] != syl[i - period]) {
        return std::nullopt;
      }
    }
    root.assign(syl.begin(), syl.begin() + static_cast<std::ptrdiff_t>(period));
  }
  Word middle(w.alphabet(), std::move(root));
  return fg_multiply(fg_multiply(conjugator, middle), invert(conjugator));
}

Word restrict_letters(const Word& w, const std::function<bool(std::string_view)>& keep) {
  std::vector<Letter> kept;
  for (const auto& letter : w.syllables()) {
    if (keep(letter.base)) {
      kept.push_back(letter);
    }
  }
  return free_reduce(Word(w.alphabet(), std::move(kept)));
}

Word parse_word(std::string_view text, const AlphabetPtr& alphabet) {
  std::vector<Letter> syllables;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == text.size()) {
      break;
    }
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) {
      ++end;
    }
    std::string_view token = text.substr(pos, end - pos);
    pos = end;
    if (token == "1") {
      continue;
    }
    auto caret = token.find('^');
    std::string_view base = token.substr(0, caret);
    if (!valid_base_syntax(base)) {
      throw WordError("malformed generator '" + std::string(base) + "'");
    }
    if (!alphabet->contains(base)) {
      throw UnknownGenerator("generator '" + std::string(base) + "' is not in alphabet " +
                             alphabet->describe());
    }
    BigInt exponent = 1;
    if (caret != std::string_view::npos) {
      try {
        exponent = parse_bigint(token.substr(caret + 1));
      } catch (const std::invalid_argument&) {
        throw WordError("malformed exponent in '" + std::string(token) + "'");
      }
    }
    syllables.push_back({std::string(base), std::move(exponent)});
  }
  return Word(alphabet, std::move(syllables));
}

std::string to_string(const Word& w) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (const auto& letter : w.syllables()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += letter.base;
    if (letter.exponent != 1) {
      out += '^';
      out += letter.exponent.str();
    }
  }
  return out;
}

BigInt word_length(const Word& w) {
  BigInt total = 0;
  for (const auto& letter : free_reduce(w).syllables()) {
    total += abs(letter.exponent);
  }
  return total;
}

LengthFunction<Word> word_length_function(LengthKind kind, std::uint64_t monotone_constant) {
  return {[](const Word& w) { return word_length(w); }, kind, monotone_constant};
}

}  // namespace slender::word
