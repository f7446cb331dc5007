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

// Finite truncations of the Hawaiian earring group. A truncated word of depth
// D is the family of its projections w_1, ..., w_D, where w_N is a reduced
// word in a_1, ..., a_N and deleting the letters of index > N from w_M
// leaves w_N after free reduction.

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "slender/bigint.hpp"
#include "slender/group.hpp"
#include "slender/word.hpp"

namespace slender::earring {

class EarringError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DepthMismatch : public EarringError {
 public:
  using EarringError::EarringError;
};

class BudgetExceeded : public EarringError {
 public:
  using EarringError::EarringError;
};

/// The alphabet a_1, a_2, ...
const word::AlphabetPtr& earring_alphabet();

class TruncatedEarringWord {
 public:
  /// The identity of depth `depth`.
  explicit TruncatedEarringWord(std::uint64_t depth);
  /// Throws EarringError unless the levels are reduced, use admissible
  /// letters and are coherent.
  explicit TruncatedEarringWord(std::vector<word::Word> levels);

  std::uint64_t depth() const { return levels_.size(); }
  /// w_N for 1 <= N <= depth.
  const word::Word& level(std::uint64_t n) const;
  const std::vector<word::Word>& levels() const { return levels_; }
  const word::Word& top() const { return levels_.back(); }

  friend bool operator==(const TruncatedEarringWord&, const TruncatedEarringWord&) = default;

 private:
  struct Trusted {};
  TruncatedEarringWord(std::vector<word::Word> levels, Trusted);

  friend TruncatedEarringWord from_word(const word::Word& w, std::uint64_t depth);
  friend TruncatedEarringWord ew_concat(const TruncatedEarringWord& u,
                                        const TruncatedEarringWord& v);
  friend TruncatedEarringWord ew_invert(const TruncatedEarringWord& u);
  friend TruncatedEarringWord ew_project_low(const TruncatedEarringWord& u, std::uint64_t n);
  friend TruncatedEarringWord ew_project_high(const TruncatedEarringWord& u, std::uint64_t n);
  friend TruncatedEarringWord ew_power(const TruncatedEarringWord& u, const BigInt& q,
                                       std::size_t budget);

  std::vector<word::Word> levels_;
};

/// Re-derives every level from its successor and compares.
bool coherence_check(const TruncatedEarringWord& u);

/// The projections of a finite word over a_1, a_2, ... Letters of index
/// above the depth vanish.
TruncatedEarringWord from_word(const word::Word& w, std::uint64_t depth);

TruncatedEarringWord ew_generator(std::uint64_t n, std::uint64_t depth);
TruncatedEarringWord ew_concat(const TruncatedEarringWord& u, const TruncatedEarringWord& v);
TruncatedEarringWord ew_invert(const TruncatedEarringWord& u);

/// Syllable budget per level for operations whose output can grow
/// geometrically.
inline constexpr std::size_t kDefaultBudget = std::size_t{1} << 20;

TruncatedEarringWord ew_power(const TruncatedEarringWord& u, const BigInt& q,
                              std::size_t budget = kDefaultBudget);

/// p_N: keep letters of index <= N. N = 0 gives the identity.
TruncatedEarringWord ew_project_low(const TruncatedEarringWord& u, std::uint64_t n);
/// p^N: delete letters of index <= N. N = 0 gives u.
TruncatedEarringWord ew_project_high(const TruncatedEarringWord& u, std::uint64_t n);

enum class BlockKind { low, high };

struct Block {
  BlockKind kind;
  word::Word letters;

  friend bool operator==(const Block&, const Block&) = default;
};

/// The top level cut into maximal runs of letters of index <= N (low) and
/// > N (high).
std::vector<Block> ew_split(const TruncatedEarringWord& u, std::uint64_t n);

/// U_0, ..., U_D with U_D = 1 and U_{i-1} = W_i U_i^{m_i}. W_i may only use
/// indices above i; missing W_i are empty. Throws BudgetExceeded when a level
/// would exceed `budget` syllables.
std::vector<TruncatedEarringWord> ew_diag_word(const std::vector<word::Word>& w,
                                               const std::vector<BigInt>& m,
                                               std::uint64_t depth,
                                               std::size_t budget = kDefaultBudget);

std::string to_string(const TruncatedEarringWord& u);

/// A homomorphism from the earring group determined by finitely many
/// generator images; a_n maps to the identity for n > bound.
template <Group G>
struct GeneratorMap {
  G target;
  std::map<std::uint64_t, element_t<G>> images;
  std::uint64_t bound = 0;

  GeneratorMap(G group, std::map<std::uint64_t, element_t<G>> assignments, std::uint64_t b)
      : target(std::move(group)), images(std::move(assignments)), bound(b) {
    for (const auto& entry : images) {
      if (entry.first == 0 || entry.first > bound) {
        throw EarringError("generator a_" + std::to_string(entry.first) +
                           " lies outside the support bound " + std::to_string(bound));
      }
    }
  }

  element_t<G> image(std::uint64_t n) const {
    auto it = images.find(n);
    return it == images.end() ? target.identity() : it->second;
  }
};

/// phi(u), read off the level-B word where B is the support bound.
template <Group G>
element_t<G> ew_eval_hom(const GeneratorMap<G>& phi, const TruncatedEarringWord& u) {
  if (phi.bound > u.depth()) {
    throw DepthMismatch("support bound " + std::to_string(phi.bound) + " exceeds depth " +
                        std::to_string(u.depth()));
  }
  element_t<G> value = phi.target.identity();
  if (phi.bound == 0) {
    return value;
  }
  for (const auto& letter : u.level(phi.bound).syllables()) {
    auto n = *word::generator_index(letter.base);
    value = phi.target.multiply(value, power(phi.target, phi.image(n), letter.exponent));
  }
  return value;
}

}  // namespace slender::earring
