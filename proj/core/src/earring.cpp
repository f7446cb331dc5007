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

#include "slender/earring.hpp"

namespace slender::earring {

namespace {

std::uint64_t index_of(const word::Letter& letter) { return *word::generator_index(letter.base); }

word::Word keep_at_most(const word::Word& w, std::uint64_t n) {
  return word::restrict_letters(w, [n](std::string_view base) {
    return *word::generator_index(base) <= n;
  });
}

word::Word keep_above(const word::Word& w, std::uint64_t n) {
  return word::restrict_letters(w, [n](std::string_view base) {
    return *word::generator_index(base) > n;
  });
}

void require_same_depth(const TruncatedEarringWord& u, const TruncatedEarringWord& v) {
  if (u.depth() != v.depth()) {
    throw DepthMismatch("depths " + std::to_string(u.depth()) + " and " +
                        std::to_string(v.depth()) + " differ");
  }
}

void require_level(const TruncatedEarringWord& u, std::uint64_t n) {
  if (n > u.depth()) {
    throw DepthMismatch("level " + std::to_string(n) + " exceeds depth " +
                        std::to_string(u.depth()));
  }
}

}  // namespace

const word::AlphabetPtr& earring_alphabet() {
  static const word::AlphabetPtr alphabet = word::make_indexed_alphabet("a");
  return alphabet;
}

TruncatedEarringWord::TruncatedEarringWord(std::uint64_t depth) {
  if (depth == 0) {
    throw EarringError("depth must be positive");
  }
  levels_.assign(depth, word::Word(earring_alphabet()));
}

TruncatedEarringWord::TruncatedEarringWord(std::vector<word::Word> levels, Trusted)
    : levels_(std::move(levels)) {}

TruncatedEarringWord::TruncatedEarringWord(std::vector<word::Word> levels)
    : levels_(std::move(levels)) {
  if (levels_.empty()) {
    throw EarringError("depth must be positive");
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const auto& w = levels_[i];
    if (!word::same_alphabet(w.alphabet(), earring_alphabet())) {
      throw word::AlphabetMismatch("earring levels must use the alphabet a_1, a_2, ...");
    }
    if (!w.is_reduced()) {
      throw EarringError("level " + std::to_string(i + 1) + " is not reduced");
    }
    for (const auto& letter : w.syllables()) {
      if (index_of(letter) > i + 1) {
        throw EarringError("level " + std::to_string(i + 1) + " uses " + letter.base);
      }
    }
  }
  if (!coherence_check(*this)) {
    throw EarringError("levels are not coherent under projection");
  }
}

const word::Word& TruncatedEarringWord::level(std::uint64_t n) const {
  if (n == 0 || n > levels_.size()) {
    throw DepthMismatch("level " + std::to_string(n) + " outside 1.." +
                        std::to_string(levels_.size()));
  }
  return levels_[n - 1];
}

bool coherence_check(const TruncatedEarringWord& u) {
  for (std::uint64_t n = 1; n < u.depth(); ++n) {
    if (keep_at_most(u.level(n + 1), n) != u.level(n)) {
      return false;
    }
  }
  return true;
}

TruncatedEarringWord from_word(const word::Word& w, std::uint64_t depth) {
  if (depth == 0) {
    throw EarringError("depth must be positive");
  }
  if (!word::same_alphabet(w.alphabet(), earring_alphabet())) {
    throw word::AlphabetMismatch("earring words use the alphabet a_1, a_2, ...");
  }
  std::vector<word::Word> levels(depth, word::Word(earring_alphabet()));
  levels[depth - 1] = keep_at_most(w, depth);
  for (std::uint64_t n = depth - 1; n >= 1; --n) {
    levels[n - 1] = keep_at_most(levels[n], n);
  }
  return TruncatedEarringWord(std::move(levels), TruncatedEarringWord::Trusted{});
}

TruncatedEarringWord ew_generator(std::uint64_t n, std::uint64_t depth) {
  if (n == 0) {
    throw EarringError("generators are indexed from 1");
  }
  return from_word(word::Word(earring_alphabet(), {{word::indexed_name("a", n), 1}}), depth);
}

TruncatedEarringWord ew_concat(const TruncatedEarringWord& u, const TruncatedEarringWord& v) {
  require_same_depth(u, v);
  std::vector<word::Word> levels;
  levels.reserve(u.depth());
  for (std::uint64_t n = 1; n <= u.depth(); ++n) {
    levels.push_back(word::fg_multiply(u.level(n), v.level(n)));
  }
  return TruncatedEarringWord(std::move(levels), TruncatedEarringWord::Trusted{});
}

TruncatedEarringWord ew_invert(const TruncatedEarringWord& u) {
  std::vector<word::Word> levels;
  levels.reserve(u.depth());
  for (const auto& w : u.levels()) {
    levels.push_back(word::invert(w));
  }
  return TruncatedEarringWord(std::move(levels), TruncatedEarringWord::Trusted{});
}

TruncatedEarringWord ew_power(const TruncatedEarringWord& u, const BigInt& q,
                              std::size_t budget) {
  const BigInt reps = abs(q);
  std::vector<word::Word> levels;
  levels.reserve(u.depth());
  for (const auto& w : u.levels()) {
    auto cyc = word::fg_cyclic_reduce(w);
    if (!cyc.core.empty() &&
        BigInt(2 * cyc.conjugator.size()) + reps * cyc.core.size() > BigInt(budget)) {
      throw BudgetExceeded("a level of the power would exceed " + std::to_string(budget) +
                           " syllables");
    }
    levels.push_back(word::fg_power(w, q));
  }
  return TruncatedEarringWord(std::move(levels), TruncatedEarringWord::Trusted{});
}

TruncatedEarringWord ew_project_low(const TruncatedEarringWord& u, std::uint64_t n) {
  require_level(u, n);
  std::vector<word::Word> levels;
  levels.reserve(u.depth());
  for (std::uint64_t level = 1; level <= u.depth(); ++level) {
    levels.push_back(n == 0 ? word::Word(earring_alphabet()) : u.level(std::min(level, n)));
  }
  return TruncatedEarringWord(std::move(levels), TruncatedEarringWord::Trusted{});
}

TruncatedEarringWord ew_project_high(const TruncatedEarringWord& u, std::uint64_t n) {
  require_level(u, n);
  std::vector<word::Word> levels;
  levels.reserve(u.depth());
  for (const auto& w : u.levels()) {
    levels.push_back(keep_above(w, n));
  }
  return TruncatedEarringWord(std::move(levels), TruncatedEarringWord::Trusted{});
}

std::vector<Block> ew_split(const TruncatedEarringWord& u, std::uint64_t n) {
  require_level(u, n);
  std::vector<Block> blocks;
  std::vector<word::Letter> run;
  BlockKind kind = BlockKind::low;
  auto flush = [&] {
    if (!run.empty()) {
      blocks.push_back({kind, word::Word(earring_alphabet(), std::move(run))});
      run.clear();
    }
  };
  for (const auto& letter : u.top().syllables()) {
    BlockKind k = index_of(letter) <= n ? BlockKind::low : BlockKind::high;
    if (k != kind) {
      flush();
      kind = k;
    }
    run.push_back(letter);
  }
  flush();
  return blocks;
}

std::vector<TruncatedEarringWord> ew_diag_word(const std::vector<word::Word>& w,
                                               const std::vector<BigInt>& m,
                                               std::uint64_t depth, std::size_t budget) {
  if (depth == 0) {
    throw EarringError("depth must be positive");
  }
  if (m.size() < std::min<std::size_t>(w.size(), depth)) {
    throw EarringError("an exponent m_i is needed for every W_i");
  }
  // Missing exponents only ever act on the identity.
  auto exponent = [&m](std::uint64_t i) { return i <= m.size() ? m[i - 1] : BigInt(1); };
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (const auto& letter : w[i].syllables()) {
      auto index = word::generator_index(letter.base);
      if (!index || *index <= i + 1) {
        throw EarringError("W_" + std::to_string(i + 1) + " uses " + letter.base +
                           "; only indices above " + std::to_string(i + 1) + " are allowed");
      }
    }
  }
  for (std::size_t i = 0; i < std::min<std::size_t>(m.size(), depth); ++i) {
    if (m[i] < 1) {
      throw EarringError("exponents m_i must be positive");
    }
  }
  // Beyond the depth every W_i and U_i projects to the identity.
  std::vector<TruncatedEarringWord> u(depth + 1, TruncatedEarringWord(depth));
  for (std::uint64_t i = depth; i >= 1; --i) {
    auto wi = i <= w.size() ? from_word(w[i - 1], depth) : TruncatedEarringWord(depth);
    u[i - 1] = ew_concat(wi, ew_power(u[i], exponent(i), budget));
    for (const auto& level : u[i - 1].levels()) {
      if (level.size() > budget) {
        throw BudgetExceeded("U_" + std::to_string(i - 1) + " exceeds " +
                             std::to_string(budget) + " syllables");
      }
    }
  }
  return u;
}

std::string to_string(const TruncatedEarringWord& u) {
  std::string out;
  for (std::uint64_t n = 1; n <= u.depth(); ++n) {
    out += std::to_string(n) + ": " + word::to_string(u.level(n)) + "\n";
  }
  return out;
}

}  // namespace slender::earring
