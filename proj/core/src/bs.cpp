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

#include "slender/bs.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace slender::bs {

namespace {

void require_same(const Presentation& a, const Presentation& b) {
  if (!(a == b)) {
    throw PresentationMismatch("words from " + a.describe() + " and " + b.describe());
  }
}

// Appends the syllables of v to the word (head, tail), merging at the seam.
void append(BigInt& head, std::vector<TSyllable>& tail, const BsWord& v) {
  (tail.empty() ? head : tail.back().exponent) += v.head();
  tail.insert(tail.end(), v.tail().begin(), v.tail().end());
}

}  // namespace

Presentation::Presentation(std::int64_t m, std::int64_t n) : m_(m), n_(n) {
  if (m == 0 || n == 0) {
    throw BsError("BS(m, n) requires m != 0 and n != 0");
  }
}

std::string Presentation::describe() const {
  return "BS(" + std::to_string(m_) + "," + std::to_string(n_) + ")";
}

BsWord::BsWord(Presentation presentation)
    : presentation_(presentation), head_(0), status_(Status::normal) {}

BsWord::BsWord(Presentation presentation, BigInt head, std::vector<TSyllable> tail)
    : presentation_(presentation), head_(std::move(head)), tail_(std::move(tail)) {
  for (const auto& s : tail_) {
    if (s.epsilon != 1 && s.epsilon != -1) {
      throw BsError("t-exponent must be +1 or -1");
    }
  }
}

BsWord::BsWord(Presentation presentation, BigInt head, std::vector<TSyllable> tail,
               Status status)
    : presentation_(presentation),
      head_(std::move(head)),
      tail_(std::move(tail)),
      status_(status) {}

BsWord BsWord::a_power(Presentation presentation, BigInt k) {
  return BsWord(presentation, std::move(k), {}, Status::normal);
}

BsWord BsWord::t_power(Presentation presentation, std::int64_t e) {
  std::vector<TSyllable> tail;
  int sign = e < 0 ? -1 : 1;
  for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) {
    tail.push_back({sign, 0});
  }
  return BsWord(presentation, 0, std::move(tail));
}

std::strong_ordering operator<=>(const BsWord& a, const BsWord& b) {
  auto pa = std::make_pair(a.presentation_.m(), a.presentation_.n());
  auto pb = std::make_pair(b.presentation_.m(), b.presentation_.n());
  if (auto c = pa <=> pb; c != 0) {
    return c;
  }
  if (a.tail_.size() != b.tail_.size()) {
    return a.tail_.size() <=> b.tail_.size();
  }
  if (int c = a.head_.compare(b.head_); c != 0) {
    return c <=> 0;
  }
  for (std::size_t i = 0; i < a.tail_.size(); ++i) {
    if (a.tail_[i].epsilon != b.tail_[i].epsilon) {
      return a.tail_[i].epsilon <=> b.tail_[i].epsilon;
    }
    if (int c = a.tail_[i].exponent.compare(b.tail_[i].exponent); c != 0) {
      return c <=> 0;
    }
  }
  return std::strong_ordering::equal;
}

const word::AlphabetPtr& bs_alphabet() {
  static const word::AlphabetPtr alphabet = word::make_alphabet({"a", "t"});
  return alphabet;
}

BsWord from_word(const word::Word& w, const Presentation& presentation) {
  BigInt head = 0;
  std::vector<TSyllable> tail;
  for (const auto& letter : w.syllables()) {
    if (letter.base == "a") {
      (tail.empty() ? head : tail.back().exponent) += letter.exponent;
    } else if (letter.base == "t") {
      int sign = letter.exponent < 0 ? -1 : 1;
      std::uint64_t count = to_uint64(abs(letter.exponent));
      for (std::uint64_t i = 0; i < count; ++i) {
        tail.push_back({sign, 0});
      }
    } else {
      throw word::UnknownGenerator("BS words use only the generators a and t, got '" +
                                   letter.base + "'");
    }
  }
  return BsWord(presentation, std::move(head), std::move(tail));
}

word::Word to_word(const BsWord& w) {
  std::vector<word::Letter> out;
  if (w.head() != 0) {
    out.push_back({"a", w.head()});
  }
  for (const auto& s : w.tail()) {
    // t^e t^e merges; t^e t^-e is kept so raw words print verbatim.
    if (!out.empty() && out.back().base == "t" && (out.back().exponent > 0) == (s.epsilon > 0)) {
      out.back().exponent += s.epsilon;
    } else {
      out.push_back({"t", s.epsilon});
    }
    if (s.exponent != 0) {
      out.push_back({"a", s.exponent});
    }
  }
  return word::Word(bs_alphabet(), std::move(out));
}

BsWord parse_bs_word(std::string_view text, const Presentation& presentation) {
  return from_word(word::parse_word(text, bs_alphabet()), presentation);
}

std::string to_string(const BsWord& w) { return word::to_string(to_word(w)); }

BsWord bs_reduce(const BsWord& w, std::size_t& pinches) {
  pinches = 0;
  const BigInt m = w.presentation().m();
  const BigInt n = w.presentation().n();
  BigInt head = w.head();
  std::vector<TSyllable> stack;
  stack.reserve(w.t_count());
  for (const auto& s : w.tail()) {
    if (!stack.empty() && stack.back().epsilon == -s.epsilon) {
      const auto& top = stack.back();
      BigInt replacement;
      bool pinch = false;
      if (top.epsilon == -1 && divides(m, top.exponent)) {
        // t^-1 a^(qm) t = a^(qn)
        replacement = top.exponent / m * n;
        pinch = true;
      } else if (top.epsilon == 1 && divides(n, top.exponent)) {
        // t a^(qn) t^-1 = a^(qm)
        replacement = top.exponent / n * m;
        pinch = true;
      }
      if (pinch) {
        stack.pop_back();
        BigInt& seam = stack.empty() ? head : stack.back().exponent;
        seam += replacement;
        seam += s.exponent;
        ++pinches;
        continue;
      }
    }
    stack.push_back(s);
  }
  return BsWord(w.presentation(), std::move(head), std::move(stack), Status::reduced);
}

BsWord bs_reduce(const BsWord& w) {
  std::size_t pinches = 0;
  return bs_reduce(w, pinches);
}

BsWord bs_normal_form(const BsWord& w) {
  if (w.status() == Status::normal) {
    return w;
  }
  BsWord reduced = bs_reduce(w);
  const BigInt m = w.presentation().m();
  const BigInt n = w.presentation().n();
  BigInt head = reduced.head_;
  std::vector<TSyllable> tail = reduced.tail_;
  for (std::size_t i = tail.size(); i-- > 0;) {
    auto& s = tail[i];
    BigInt& previous = i == 0 ? head : tail[i - 1].exponent;
    if (s.epsilon == 1) {
      // t a^(qn + r) = a^(qm) t a^r
      auto [q, r] = euclid_divmod(s.exponent, n);
      previous += q * m;
      s.exponent = std::move(r);
    } else {
      // t^-1 a^(qm + r) = a^(qn) t^-1 a^r
      auto [q, r] = euclid_divmod(s.exponent, m);
      previous += q * n;
      s.exponent = std::move(r);
    }
  }
  std::size_t pinches = 0;
  BsWord result = bs_reduce(BsWord(w.presentation(), std::move(head), std::move(tail)), pinches);
  assert(pinches == 0 && "carrying cannot create pinches");
  result.status_ = Status::normal;
  return result;
}

bool bs_equal(const BsWord& u, const BsWord& v) {
  require_same(u.presentation(), v.presentation());
  return bs_normal_form(u) == bs_normal_form(v);
}

bool bs_is_identity(const BsWord& w) { return bs_normal_form(w).is_empty(); }

BsWord bs_multiply(const BsWord& u, const BsWord& v) {
  require_same(u.presentation(), v.presentation());
  BigInt head = u.head();
  std::vector<TSyllable> tail(u.tail().begin(), u.tail().end());
  tail.reserve(u.t_count() + v.t_count());
  append(head, tail, v);
  return bs_normal_form(BsWord(u.presentation(), std::move(head), std::move(tail)));
}

BsWord bs_inverse(const BsWord& w) {
  // (a^k0 t^e1 a^k1 ... t^ej a^kj)^-1 = a^-kj t^-ej ... a^-k1 t^-e1 a^-k0
  auto tail_in = w.tail();
  BigInt head = tail_in.empty() ? BigInt(-w.head()) : BigInt(-tail_in.back().exponent);
  std::vector<TSyllable> tail;
  tail.reserve(tail_in.size());
  for (std::size_t i = tail_in.size(); i-- > 0;) {
    const BigInt& next = i == 0 ? w.head() : tail_in[i - 1].exponent;
    tail.push_back({-tail_in[i].epsilon, -next});
  }
  return bs_normal_form(BsWord(w.presentation(), std::move(head), std::move(tail)));
}

BsWord bs_power(const BsWord& w, const BigInt& q) {
  if (q < 0) {
    return bs_power(bs_inverse(w), -q);
  }
  BsWord result(w.presentation());
  BsWord base = bs_normal_form(w);
  BigInt e = q;
  while (e != 0) {
    if ((e & 1) != 0) {
      result = bs_multiply(result, base);
    }
    e >>= 1;
    if (e != 0) {
      base = bs_multiply(base, base);
    }
  }
  return result;
}

std::size_t bs_length(const BsWord& w) { return bs_reduce(w).t_count(); }

CyclicForm bs_cyclic_reduce(const BsWord& w) {
  const Presentation& pres = w.presentation();
  const BigInt m = pres.m();
  const BigInt n = pres.n();
  BsWord current = bs_reduce(w);
  BsWord conjugator(pres);
  // Invariant: w = conjugator * current * conjugator^-1, current reduced.
  while (current.t_count() >= 2) {
    auto tail = current.tail();
    // Rotate a^h to the far end: current = a^h C a^-h.
    BigInt seam = tail.back().exponent + current.head();
    int first = tail.front().epsilon;
    int last = tail.back().epsilon;
    bool pinch = last == -first &&
                 ((last == -1 && divides(m, seam)) || (last == 1 && divides(n, seam)));
    if (!pinch) {
      break;
    }
    // C = t^e1 C' t^-e1 with C' = a^k1 t^e2 ... t^e(j-1) a^(k(j-1) + seam')
    BsWord step(pres, current.head(), {{first, 0}});
    conjugator = bs_multiply(conjugator, step);
    std::vector<TSyllable> inner(tail.begin(), tail.end());
    inner.back().exponent = seam;
    BigInt head = 0;
    std::vector<TSyllable> rotated(inner.begin() + 1, inner.end());
    head = inner.front().exponent;
    rotated.push_back({first, 0});
    current = bs_reduce(BsWord(pres, std::move(head), std::move(rotated)));
  }
  if (current.t_count() == 0) {
    return {bs_normal_form(current), bs_normal_form(conjugator)};
  }
  // current = a^h t^e1 ... t^ej a^kj; rotate so the word ends with t^ej:
  // current = a^-kj (a^(kj + h) t^e1 ... t^ej) a^kj.
  auto tail = current.tail();
  BigInt last_exp = tail.back().exponent;
  std::vector<TSyllable> rotated(tail.begin(), tail.end());
  rotated.back().exponent = 0;
  BsWord core(pres, current.head() + last_exp, std::move(rotated));
  conjugator = bs_multiply(conjugator, BsWord::a_power(pres, -last_exp));
  return {bs_normal_form(core), conjugator};
}

std::size_t bs_cyclic_length(const BsWord& w) { return bs_cyclic_reduce(w).core.t_count(); }

bool bs_is_cyclically_reduced(const BsWord& w) {
  BsWord r = bs_reduce(w);
  if (r.t_count() != w.t_count()) {
    return false;
  }
  if (w.t_count() == 0) {
    return true;
  }
  auto tail = w.tail();
  if (tail.back().exponent != 0) {
    throw BsError("cyclic reducedness is defined for words ending with a t-letter");
  }
  if (w.t_count() == 1) {
    return true;
  }
  int first = tail.front().epsilon;
  int last = tail.back().epsilon;
  const BigInt m = w.presentation().m();
  const BigInt n = w.presentation().n();
  bool pinch = last == -first && ((last == -1 && divides(m, w.head())) ||
                                  (last == 1 && divides(n, w.head())));
  return !pinch;
}

namespace {

void enumerate_tails(const Presentation& pres, const RootBound& bound, std::size_t length,
                     std::vector<TSyllable>& prefix, std::vector<std::vector<TSyllable>>& out) {
  if (prefix.size() == length) {
    out.push_back(prefix);
    return;
  }
  for (int epsilon : {1, -1}) {
    if (!prefix.empty() && prefix.back().epsilon == -epsilon && prefix.back().exponent == 0) {
      continue;  // t^e a^0 t^-e is a pinch
    }
    std::int64_t modulus = epsilon == 1 ? pres.n() : pres.m();
    modulus = modulus < 0 ? -modulus : modulus;
    for (std::int64_t k = 0; k < modulus && k <= bound.max_exp; ++k) {
      prefix.push_back({epsilon, k});
      enumerate_tails(pres, bound, length, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<BsWord> bs_enumerate_normal_forms(const Presentation& presentation,
                                              const RootBound& bound) {
  std::vector<BsWord> out;
  for (std::size_t length = 0; length <= bound.max_t; ++length) {
    std::vector<std::vector<TSyllable>> tails;
    std::vector<TSyllable> prefix;
    enumerate_tails(presentation, bound, length, prefix, tails);
    for (BigInt k0 = -bound.max_exp; k0 <= bound.max_exp; ++k0) {
      for (const auto& tail : tails) {
        out.emplace_back(bs_normal_form(BsWord(presentation, k0, tail)));
      }
    }
  }
  return out;
}

std::vector<BsWord> bs_find_roots(const BsWord& g, std::uint64_t p, const RootBound& bound) {
  if (p == 0) {
    throw BsError("bs_find_roots: p must be positive");
  }
  BsWord target = bs_normal_form(g);
  if (p == 1) {
    return {target};
  }
  std::vector<BsWord> roots;
  for (const auto& h : bs_enumerate_normal_forms(g.presentation(), bound)) {
    if (bs_power(h, p) == target) {
      roots.push_back(h);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Rational frac(int epsilon, const Presentation& presentation) {
  if (epsilon == 1) {
    return Rational(presentation.n(), presentation.m());
  }
  if (epsilon == -1) {
    return Rational(presentation.m(), presentation.n());
  }
  throw BsError("Frac is defined for epsilon = +1 or -1");
}

FracTrace frac_T_check(std::span<const int> epsilons, const Presentation& presentation,
                       std::uint64_t q) {
  if (q == 0 || q % 2 == 0) {
    throw BsError("frac_T_check requires an odd positive q");
  }
  Rational t = 1;
  for (int e : epsilons) {
    t *= frac(e, presentation);
  }
  Rational sum = 0;
  Rational term = 1;
  for (std::uint64_t i = 0; i < q; ++i) {
    sum += term;
    term *= t;
  }
  return {std::vector<int>(epsilons.begin(), epsilons.end()), t, sum, sum != 0};
}

}  // namespace slender::bs
