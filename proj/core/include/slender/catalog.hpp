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

// Concrete groups (Z, Z^d, Z[1/m], free groups, Baumslag-Solitar groups,
// Thompson's F), type erasure for run-time construction trees, and the two
// combinators direct sum and free product. Also k-antecedent sets and
// length balls.

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <typeindex>
#include <vector>

#include "slender/bigint.hpp"
#include "slender/bs.hpp"
#include "slender/group.hpp"
#include "slender/thompson.hpp"
#include "slender/word.hpp"

namespace slender::catalog {

class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FactorMismatch : public CatalogError {
 public:
  using CatalogError::CatalogError;
};

/// Raised when k-antecedents keep appearing past the configured limits. The
/// chain lists g, a k-th root of g, a k-th root of that, ...
class AntecedentDivergence : public CatalogError {
 public:
  AntecedentDivergence(const std::string& what, std::vector<std::string> chain)
      : CatalogError(what), chain_(std::move(chain)) {}

  const std::vector<std::string>& chain() const { return chain_; }

 private:
  std::vector<std::string> chain_;
};

// ---------------------------------------------------------------------------
// Type erasure

class AnyElement {
 public:
  AnyElement() = default;

  template <class E>
    requires(!std::same_as<std::decay_t<E>, AnyElement>)
  explicit AnyElement(E value)
      : self_(std::make_shared<const Model<std::decay_t<E>>>(std::move(value))) {}

  bool has_value() const { return self_ != nullptr; }

  template <class E>
  bool holds() const {
    return dynamic_cast<const Model<E>*>(self_.get()) != nullptr;
  }

  template <class E>
  const E& get() const {
    const auto* model = dynamic_cast<const Model<E>*>(self_.get());
    if (model == nullptr) {
      throw FactorMismatch("element does not belong to the expected factor group");
    }
    return model->value;
  }

  friend bool operator==(const AnyElement& a, const AnyElement& b) {
    return (a <=> b) == 0;
  }
  friend std::strong_ordering operator<=>(const AnyElement& a, const AnyElement& b);

 private:
  struct Concept {
    virtual ~Concept() = default;
    virtual std::type_index type() const = 0;
    virtual std::strong_ordering compare_same_type(const Concept& other) const = 0;
  };

  template <class E>
  struct Model final : Concept {
    explicit Model(E v) : value(std::move(v)) {}
    std::type_index type() const override { return typeid(E); }
    std::strong_ordering compare_same_type(const Concept& other) const override {
      const E& rhs = static_cast<const Model&>(other).value;
      return std::compare_strong_order_fallback(value, rhs);
    }
    E value;
  };

  std::shared_ptr<const Concept> self_;
};

/// A group whose concrete type is chosen at run time. Optional capabilities
/// of the wrapped group are reported by the has_* members; calling an
/// unsupported one throws Unsupported.
class AnyGroup {
 public:
  using element_type = AnyElement;

  template <Group G>
    requires(!std::same_as<G, AnyGroup>)
  explicit AnyGroup(G group) : self_(std::make_shared<const Model<G>>(std::move(group))) {}

  AnyElement identity() const { return self_->identity(); }
  AnyElement multiply(const AnyElement& x, const AnyElement& y) const {
    return self_->multiply(x, y);
  }
  AnyElement inverse(const AnyElement& x) const { return self_->inverse(x); }
  std::string format(const AnyElement& x) const { return self_->format(x); }
  AnyElement parse(std::string_view text) const { return self_->parse(text); }
  std::string name() const { return self_->name(); }

  bool has_roots() const { return self_->has_roots(); }
  RootSet<AnyElement> roots(const AnyElement& x, const BigInt& k) const {
    return self_->roots(x, k);
  }
  bool has_length() const { return self_->has_length(); }
  BigInt length(const AnyElement& x) const { return self_->length(x); }
  bool has_ball() const { return self_->has_ball(); }
  std::vector<AnyElement> ball(std::uint64_t n) const { return self_->ball(n); }
  bool has_enumeration() const { return self_->has_enumeration(); }
  std::vector<AnyElement> enumerate(std::size_t count) const { return self_->enumerate(count); }

  /// The wrapped group, or nullptr when it is not a G.
  template <class G>
  const G* target() const {
    const auto* model = dynamic_cast<const Model<G>*>(self_.get());
    return model ? &model->group : nullptr;
  }

 private:
  struct Concept {
    virtual ~Concept() = default;
    virtual AnyElement identity() const = 0;
    virtual AnyElement multiply(const AnyElement&, const AnyElement&) const = 0;
    virtual AnyElement inverse(const AnyElement&) const = 0;
    virtual std::string format(const AnyElement&) const = 0;
    virtual AnyElement parse(std::string_view) const = 0;
    virtual std::string name() const = 0;
    virtual bool has_roots() const = 0;
    virtual RootSet<AnyElement> roots(const AnyElement&, const BigInt&) const = 0;
    virtual bool has_length() const = 0;
    virtual BigInt length(const AnyElement&) const = 0;
    virtual bool has_ball() const = 0;
    virtual std::vector<AnyElement> ball(std::uint64_t) const = 0;
    virtual bool has_enumeration() const = 0;
    virtual std::vector<AnyElement> enumerate(std::size_t) const = 0;
  };

  template <Group G>
  struct Model final : Concept {
    using E = element_t<G>;

    explicit Model(G g) : group(std::move(g)) {}

    static std::vector<AnyElement> wrap(std::vector<E> xs) {
      std::vector<AnyElement> out;
      out.reserve(xs.size());
      for (auto& x : xs) {
        out.emplace_back(std::move(x));
      }
      return out;
    }

    AnyElement identity() const override { return AnyElement(group.identity()); }
    AnyElement multiply(const AnyElement& x, const AnyElement& y) const override {
      return AnyElement(group.multiply(x.get<E>(), y.get<E>()));
    }
    AnyElement inverse(const AnyElement& x) const override {
      return AnyElement(group.inverse(x.get<E>()));
    }
    std::string format(const AnyElement& x) const override { return group.format(x.get<E>()); }
    AnyElement parse(std::string_view text) const override { return AnyElement(group.parse(text)); }
    std::string name() const override { return group.name(); }

    bool has_roots() const override { return supports_roots(group); }
    RootSet<AnyElement> roots(const AnyElement& x, const BigInt& k) const override {
      if constexpr (HasRoots<G>) {
        auto found = group.roots(x.get<E>(), k);
        return {wrap(std::move(found.roots)), found.complete};
      } else {
        throw Unsupported(group.name() + " does not extract roots");
      }
    }
    bool has_length() const override { return supports_length(group); }
    BigInt length(const AnyElement& x) const override {
      if constexpr (HasLength<G>) {
        return group.length(x.get<E>());
      } else {
        throw Unsupported(group.name() + " has no length function");
      }
    }
    bool has_ball() const override { return supports_ball(group); }
    std::vector<AnyElement> ball(std::uint64_t n) const override {
      if constexpr (HasBall<G>) {
        return wrap(group.ball(n));
      } else {
        throw Unsupported(group.name() + " has no enumerable balls");
      }
    }
    bool has_enumeration() const override { return supports_enumeration(group); }
    std::vector<AnyElement> enumerate(std::size_t count) const override {
      if constexpr (Enumerable<G>) {
        return wrap(group.enumerate(count));
      } else {
        throw Unsupported(group.name() + " has no fixed enumeration");
      }
    }

    G group;
  };

  std::shared_ptr<const Concept> self_;
};

// ---------------------------------------------------------------------------
// Concrete groups

/// The integers under addition, with |x| as a Dudley norm.
class IntegerGroup {
 public:
  using element_type = BigInt;

  BigInt identity() const { return 0; }
  BigInt multiply(const BigInt& x, const BigInt& y) const { return x + y; }
  BigInt inverse(const BigInt& x) const { return -x; }
  std::string format(const BigInt& x) const { return x.str(); }
  BigInt parse(std::string_view text) const;
  std::string name() const { return "z"; }

  RootSet<BigInt> roots(const BigInt& x, const BigInt& k) const;
  BigInt length(const BigInt& x) const { return abs(x); }
  std::vector<BigInt> ball(std::uint64_t n) const;
  /// 0, 1, -1, 2, -2, ...
  std::vector<BigInt> enumerate(std::size_t count) const;
};

struct FreeAbelianElement {
  std::vector<BigInt> coordinates;

  friend bool operator==(const FreeAbelianElement&, const FreeAbelianElement&) = default;
  friend bool operator<(const FreeAbelianElement& a, const FreeAbelianElement& b) {
    return a.coordinates < b.coordinates;
  }
  friend bool operator>(const FreeAbelianElement& a, const FreeAbelianElement& b) { return b < a; }
  friend bool operator<=(const FreeAbelianElement& a, const FreeAbelianElement& b) {
    return !(b < a);
  }
  friend bool operator>=(const FreeAbelianElement& a, const FreeAbelianElement& b) {
    return !(a < b);
  }
};

/// Z^d with the l1 norm.
class FreeAbelianGroup {
 public:
  using element_type = FreeAbelianElement;

  explicit FreeAbelianGroup(std::size_t rank);

  std::size_t rank() const { return rank_; }
  FreeAbelianElement make(std::vector<BigInt> coordinates) const;

  FreeAbelianElement identity() const;
  FreeAbelianElement multiply(const FreeAbelianElement& x, const FreeAbelianElement& y) const;
  FreeAbelianElement inverse(const FreeAbelianElement& x) const;
  std::string format(const FreeAbelianElement& x) const;
  FreeAbelianElement parse(std::string_view text) const;
  std::string name() const { return "z(" + std::to_string(rank_) + ")"; }

  RootSet<FreeAbelianElement> roots(const FreeAbelianElement& x, const BigInt& k) const;
  BigInt length(const FreeAbelianElement& x) const;
  std::vector<FreeAbelianElement> ball(std::uint64_t n) const;
  /// Shells of increasing l1 norm, each in lexicographic order.
  std::vector<FreeAbelianElement> enumerate(std::size_t count) const;

 private:
  std::size_t rank_;
};

struct ZInvMElement {
  Rational value;

  friend bool operator==(const ZInvMElement& a, const ZInvMElement& b) {
    return a.value == b.value;
  }
  friend bool operator<(const ZInvMElement& a, const ZInvMElement& b) { return a.value < b.value; }
  friend bool operator>(const ZInvMElement& a, const ZInvMElement& b) { return b < a; }
  friend bool operator<=(const ZInvMElement& a, const ZInvMElement& b) { return !(b < a); }
  friend bool operator>=(const ZInvMElement& a, const ZInvMElement& b) { return !(a < b); }
};

/// Z[1/m]: rationals whose denominators have only prime factors of m.
class ZInvMGroup {
 public:
  using element_type = ZInvMElement;

  explicit ZInvMGroup(std::uint64_t m);

  std::uint64_t m() const { return m_; }
  bool admits(const Rational& value) const;
  ZInvMElement make(const Rational& value) const;

  ZInvMElement identity() const { return {Rational(0)}; }
  ZInvMElement multiply(const ZInvMElement& x, const ZInvMElement& y) const;
  ZInvMElement inverse(const ZInvMElement& x) const;
  std::string format(const ZInvMElement& x) const { return to_string(x.value); }
  ZInvMElement parse(std::string_view text) const;
  std::string name() const { return "zinv(" + std::to_string(m_) + ")"; }

  /// The unique rational k-th root x/k when it lies in Z[1/m].
  RootSet<ZInvMElement> roots(const ZInvMElement& x, const BigInt& k) const;
  /// Levels L = 0, 1, ...: elements p/m^e with e <= L and |value| <= L not
  /// already listed.
  std::vector<ZInvMElement> enumerate(std::size_t count) const;

 private:
  std::uint64_t m_;
};

/// The free group on the first `rank` letters a, b, c, ... with reduced word
/// length.
class FreeGroup {
 public:
  using element_type = word::Word;

  explicit FreeGroup(std::size_t rank);

  std::size_t rank() const { return rank_; }
  const word::AlphabetPtr& alphabet() const { return alphabet_; }
  word::Word generator(std::size_t i) const;

  word::Word identity() const { return word::Word(alphabet_); }
  word::Word multiply(const word::Word& x, const word::Word& y) const {
    return word::fg_multiply(x, y);
  }
  word::Word inverse(const word::Word& x) const { return word::invert(x); }
  std::string format(const word::Word& x) const { return word::to_string(x); }
  word::Word parse(std::string_view text) const;
  std::string name() const { return "free(" + std::to_string(rank_) + ")"; }

  RootSet<word::Word> roots(const word::Word& x, const BigInt& k) const;
  BigInt length(const word::Word& x) const { return word::word_length(x); }
  std::vector<word::Word> ball(std::uint64_t n) const;
  /// Spheres of increasing length.
  std::vector<word::Word> enumerate(std::size_t count) const;

 private:
  std::size_t rank_;
  word::AlphabetPtr alphabet_;
};

/// BS(m, n) on normal forms. Roots are exact where the group theory pins
/// them down and otherwise come from a bounded search.
class BsGroup {
 public:
  using element_type = bs::BsWord;

  explicit BsGroup(bs::Presentation presentation, bs::RootBound search_bound = {2, 4});

  const bs::Presentation& presentation() const { return presentation_; }
  const bs::RootBound& search_bound() const { return bound_; }

  bs::BsWord identity() const { return bs::BsWord(presentation_); }
  bs::BsWord multiply(const bs::BsWord& x, const bs::BsWord& y) const {
    return bs::bs_multiply(x, y);
  }
  bs::BsWord inverse(const bs::BsWord& x) const { return bs::bs_inverse(x); }
  std::string format(const bs::BsWord& x) const { return bs::to_string(x); }
  bs::BsWord parse(std::string_view text) const;
  std::string name() const;

  RootSet<bs::BsWord> roots(const bs::BsWord& x, const BigInt& k) const;
  /// Number of t-letters; vanishes on <a>, so it is not a norm.
  BigInt length(const bs::BsWord& x) const { return bs::bs_length(x); }
  /// Levels L = 0, 1, ...: normal forms with at most L t-letters and
  /// exponents bounded by L.
  std::vector<bs::BsWord> enumerate(std::size_t count) const;

 private:
  bs::Presentation presentation_;
  bs::RootBound bound_;
};

/// Thompson's group F with the left-to-right product of thompson::pl_multiply.
class ThompsonGroup {
 public:
  using element_type = thompson::PLMap;

  thompson::PLMap identity() const { return {}; }
  thompson::PLMap multiply(const thompson::PLMap& x, const thompson::PLMap& y) const {
    return thompson::pl_multiply(x, y);
  }
  thompson::PLMap inverse(const thompson::PLMap& x) const { return thompson::pl_invert(x); }
  std::string format(const thompson::PLMap& x) const { return thompson::to_string(x); }
  /// "(x, y) (x, y) ..." with dyadic coordinates.
  thompson::PLMap parse(std::string_view text) const;
  std::string name() const { return "thompson"; }
};

// ---------------------------------------------------------------------------
// Direct sums

struct DirectSumElement {
  /// Nonidentity components only; the key set is the support.
  std::map<std::size_t, AnyElement> components;

  friend bool operator==(const DirectSumElement&, const DirectSumElement&) = default;
  friend bool operator<(const DirectSumElement& a, const DirectSumElement& b) {
    return a.components < b.components;
  }
  friend bool operator>(const DirectSumElement& a, const DirectSumElement& b) { return b < a; }
  friend bool operator<=(const DirectSumElement& a, const DirectSumElement& b) {
    return !(b < a);
  }
  friend bool operator>=(const DirectSumElement& a, const DirectSumElement& b) {
    return !(a < b);
  }
};

/// Finitely supported elements of the direct sum over an index family. The
/// family is either a finite list or a rule producing the factor at index i.
class DirectSumGroup {
 public:
  using element_type = DirectSumElement;

  explicit DirectSumGroup(std::vector<AnyGroup> factors);
  DirectSumGroup(std::function<AnyGroup(std::size_t)> family, std::string name);

  /// Throws FactorMismatch for an index outside the family.
  AnyGroup factor(std::size_t index) const;
  std::optional<std::size_t> factor_count() const;

  DirectSumElement inject(std::size_t index, const AnyElement& x) const;
  AnyElement project(const DirectSumElement& x, std::size_t index) const;

  DirectSumElement identity() const { return {}; }
  DirectSumElement multiply(const DirectSumElement& x, const DirectSumElement& y) const;
  DirectSumElement inverse(const DirectSumElement& x) const;
  /// "{i: x_i; j: x_j}"
  std::string format(const DirectSumElement& x) const;
  DirectSumElement parse(std::string_view text) const;
  std::string name() const;

 private:
  struct Family {
    std::vector<AnyGroup> finite;
    std::function<AnyGroup(std::size_t)> rule;
    std::string name;
  };
  std::shared_ptr<const Family> family_;
};

DirectSumElement dsum_multiply(const DirectSumGroup& g, const DirectSumElement& u,
                               const DirectSumElement& v);

/// { i : p_i(g) != 1 }, ascending.
std::vector<std::size_t> supp(const DirectSumElement& g);

/// The direct sum of Z[1/m] over all m >= 1 (factor index m).
DirectSumGroup zinv_family_sum();

// ---------------------------------------------------------------------------
// Free products

struct FreeProductSyllable {
  std::size_t factor;
  AnyElement value;

  friend bool operator==(const FreeProductSyllable&, const FreeProductSyllable&) = default;
  friend std::strong_ordering operator<=>(const FreeProductSyllable& a,
                                          const FreeProductSyllable& b) {
    if (auto c = a.factor <=> b.factor; c != 0) {
      return c;
    }
    return a.value <=> b.value;
  }
};

struct FreeProductElement {
  /// Alternating: adjacent syllables come from different factors and no
  /// syllable is an identity.
  std::vector<FreeProductSyllable> syllables;

  friend bool operator==(const FreeProductElement&, const FreeProductElement&) = default;
  friend bool operator<(const FreeProductElement& a, const FreeProductElement& b) {
    return a.syllables < b.syllables;
  }
  friend bool operator>(const FreeProductElement& a, const FreeProductElement& b) { return b < a; }
  friend bool operator<=(const FreeProductElement& a, const FreeProductElement& b) {
    return !(b < a);
  }
  friend bool operator>=(const FreeProductElement& a, const FreeProductElement& b) {
    return !(a < b);
  }
};

class FreeProductGroup {
 public:
  using element_type = FreeProductElement;

  explicit FreeProductGroup(std::vector<AnyGroup> factors);

  const AnyGroup& factor(std::size_t index) const;
  std::size_t factor_count() const { return factors_->size(); }

  FreeProductElement identity() const { return {}; }
  FreeProductElement multiply(const FreeProductElement& x, const FreeProductElement& y) const;
  FreeProductElement inverse(const FreeProductElement& x) const;
  /// "[i: x][j: y]"; the identity is "[]".
  std::string format(const FreeProductElement& x) const;
  FreeProductElement parse(std::string_view text) const;
  std::string name() const;

 private:
  std::shared_ptr<const std::vector<AnyGroup>> factors_;
};

/// Merges adjacent syllables of the same factor and drops identities until
/// the sequence alternates.
FreeProductElement fprod_normal_form(const FreeProductGroup& g,
                                     std::vector<FreeProductSyllable> raw);

// ---------------------------------------------------------------------------
// Antecedents and balls

struct AntecedentLimits {
  std::size_t max_depth = 512;
  std::size_t max_size = std::size_t{1} << 16;
};

template <class E>
struct AntecedentSet {
  std::vector<E> elements;  // sorted
  bool complete = true;     // false when some root query was only bounded
};

/// Ant_k(x) = { h : h^(k^n) = x for some n >= 0 }.
template <Group G>
AntecedentSet<element_t<G>> antecedents(const G& g, const element_t<G>& x, const BigInt& k,
                                        const AntecedentLimits& limits = {}) {
  using E = element_t<G>;
  if (k < 1) {
    throw CatalogError("antecedents: k must be positive");
  }
  if (!supports_roots(g)) {
    throw Unsupported(g.name() + " does not extract roots");
  }
  if constexpr (HasRoots<G>) {
    std::map<E, std::optional<E>> parent;  // h -> the element h is a k-th root of
    parent.emplace(x, std::nullopt);
    std::vector<E> frontier{x};
    bool complete = true;
    std::size_t depth = 0;
    while (!frontier.empty()) {
      if (depth >= limits.max_depth || parent.size() > limits.max_size) {
        std::vector<std::string> chain;
        for (std::optional<E> cur = frontier.front(); cur; cur = parent.at(*cur)) {
          chain.push_back(g.format(*cur));
        }
        std::reverse(chain.begin(), chain.end());
        throw AntecedentDivergence("k-antecedents of " + g.format(x) + " do not terminate in " +
                                       g.name(),
                                   std::move(chain));
      }
      std::vector<E> next;
      for (const auto& y : frontier) {
        auto found = g.roots(y, k);
        complete = complete && found.complete;
        for (auto& h : found.roots) {
          if (parent.emplace(h, y).second) {
            next.push_back(std::move(h));
          }
        }
      }
      frontier = std::move(next);
      ++depth;
    }
    AntecedentSet<E> out;
    out.complete = complete;
    out.elements.reserve(parent.size());
    for (auto& entry : parent) {
      out.elements.push_back(entry.first);
    }
    return out;
  } else {
    throw Unsupported(g.name() + " does not extract roots");
  }
}

template <Group G>
word::LengthFunction<element_t<G>> group_length_function(
    const G& g, word::LengthKind kind = word::LengthKind::plain,
    std::uint64_t monotone_constant = 0) {
  if (!supports_length(g)) {
    throw Unsupported(g.name() + " has no length function");
  }
  if constexpr (HasLength<G>) {
    return {[g](const element_t<G>& x) { return BigInt(g.length(x)); }, kind, monotone_constant};
  } else {
    throw Unsupported(g.name() + " has no length function");
  }
}

/// { x : l(x) <= n } as a predicate; no enumeration.
template <class E>
ElementSet<E> ball(const word::LengthFunction<E>& l, std::uint64_t n) {
  return ElementSet<E>([l, bound = BigInt(n)](const E& x) { return l(x) <= bound; });
}

/// The ball for the group's own length function, enumerated when the group
/// can list it.
template <Group G>
ElementSet<element_t<G>> ball(const G& g, std::uint64_t n) {
  auto l = group_length_function(g);
  if (supports_ball(g)) {
    if constexpr (HasBall<G>) {
      return ElementSet<element_t<G>>::with_lazy_enumeration(
          [l, bound = BigInt(n)](const element_t<G>& x) { return l(x) <= bound; },
          [g, n] { return g.ball(n); });
    }
  }
  return ball(l, n);
}

}  // namespace slender::catalog
