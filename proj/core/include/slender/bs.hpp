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

// Baumslag-Solitar groups BS(m, n) = < a, t | t^-1 a^m t = a^n >.
//
// Words are kept in syllable form a^k0 t^e1 a^k1 ... t^ej a^kj. Reduction
// removes pinches t^-1 a^(km) t and t a^(kn) t^-1; the normal form
// additionally pushes a-powers leftwards so that the exponent after each t
// lies in [0, |n|) and after each t^-1 in [0, |m|). Two words represent the
// same element exactly when their normal forms coincide.

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "slender/bigint.hpp"
#include "slender/word.hpp"

namespace slender::bs {

class BsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PresentationMismatch : public BsError {
 public:
  using BsError::BsError;
};

class Presentation {
 public:
  Presentation(std::int64_t m, std::int64_t n);

  std::int64_t m() const { return m_; }
  std::int64_t n() const { return n_; }
  std::string describe() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::int64_t m_;
  std::int64_t n_;
};

enum class Status { raw, reduced, normal };

/// t^epsilon a^exponent
struct TSyllable {
  int epsilon;
  BigInt exponent;

  friend bool operator==(const TSyllable&, const TSyllable&) = default;
};

class BsWord {
 public:
  explicit BsWord(Presentation presentation);
  BsWord(Presentation presentation, BigInt head, std::vector<TSyllable> tail);

  static BsWord a_power(Presentation presentation, BigInt k);
  static BsWord t_power(Presentation presentation, std::int64_t e);

  const Presentation& presentation() const { return presentation_; }
  const BigInt& head() const { return head_; }
  std::span<const TSyllable> tail() const { return tail_; }
  std::size_t t_count() const { return tail_.size(); }
  Status status() const { return status_; }

  /// Syntactic: the word is a^0 with no t-letters.
  bool is_empty() const { return head_ == 0 && tail_.empty(); }

  friend bool operator==(const BsWord& a, const BsWord& b) {
    return a.presentation_ == b.presentation_ && a.head_ == b.head_ && a.tail_ == b.tail_;
  }
  friend std::strong_ordering operator<=>(const BsWord& a, const BsWord& b);

 private:
  BsWord(Presentation presentation, BigInt head, std::vector<TSyllable> tail, Status status);

  Presentation presentation_;
  BigInt head_;
  std::vector<TSyllable> tail_;
  Status status_ = Status::raw;

  friend BsWord bs_reduce(const BsWord& w, std::size_t& pinches);
  friend BsWord bs_normal_form(const BsWord& w);
};

const word::AlphabetPtr& bs_alphabet();

/// Converts a word over {a, t}; t^e with |e| > 1 expands into single letters.
BsWord from_word(const word::Word& w, const Presentation& presentation);
word::Word to_word(const BsWord& w);
BsWord parse_bs_word(std::string_view text, const Presentation& presentation);
std::string to_string(const BsWord& w);

/// Removes every pinch. `pinches` receives the number of replacements made.
BsWord bs_reduce(const BsWord& w, std::size_t& pinches);
BsWord bs_reduce(const BsWord& w);

BsWord bs_normal_form(const BsWord& w);

/// Throws PresentationMismatch when the words live in different groups.
bool bs_equal(const BsWord& u, const BsWord& v);
bool bs_is_identity(const BsWord& w);

BsWord bs_multiply(const BsWord& u, const BsWord& v);
BsWord bs_inverse(const BsWord& w);
BsWord bs_power(const BsWord& w, const BigInt& q);

/// Number of t-letters in any reduced representative.
std::size_t bs_length(const BsWord& w);

struct CyclicForm {
  BsWord core;        // normal form; in <a> or ending with a t-letter
  BsWord conjugator;  // w = conjugator * core * conjugator^-1
};

CyclicForm bs_cyclic_reduce(const BsWord& w);
std::size_t bs_cyclic_length(const BsWord& w);

/// Every cyclic permutation of the word is reduced. Requires a word that is
/// in <a> or ends with a t-letter.
bool bs_is_cyclically_reduced(const BsWord& w);

struct RootBound {
  std::size_t max_t = 1;
  BigInt max_exp = 3;
};

/// All normal forms with at most max_t t-letters and every |k_i| <= max_exp,
/// ordered by t-count first.
std::vector<BsWord> bs_enumerate_normal_forms(const Presentation& presentation,
                                              const RootBound& bound);

/// Every h within the bound with h^p = g, sorted. p = 1 returns {g}.
std::vector<BsWord> bs_find_roots(const BsWord& g, std::uint64_t p, const RootBound& bound);

struct FracTrace {
  std::vector<int> epsilons;
  Rational t;    // product of Frac(epsilon_i)
  Rational sum;  // 1 + T + ... + T^(q-1)
  bool sum_nonzero;
};

/// Frac(+1) = n/m, Frac(-1) = m/n.
Rational frac(int epsilon, const Presentation& presentation);

/// q must be odd and positive.
FracTrace frac_T_check(std::span<const int> epsilons, const Presentation& presentation,
                       std::uint64_t q);

}  // namespace slender::bs
