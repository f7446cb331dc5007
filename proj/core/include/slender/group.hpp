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

// The group interface shared by the catalog, the limiting-sequence-pair
// machinery and the earring evaluator.
//
// A group is a value type G with an element_type whose operator== is group
// equality (elements are always stored canonically). Optional capabilities
// are detected with the concepts below; type-erased groups answer them at
// run time through the has_* members.

#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "slender/bigint.hpp"

namespace slender {

class Unsupported : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <class G>
concept Group = requires(const G& g, const typename G::element_type& x, std::string_view text) {
  typename G::element_type;
  { g.identity() } -> std::convertible_to<typename G::element_type>;
  { g.multiply(x, x) } -> std::convertible_to<typename G::element_type>;
  { g.inverse(x) } -> std::convertible_to<typename G::element_type>;
  { g.format(x) } -> std::convertible_to<std::string>;
  { g.parse(text) } -> std::convertible_to<typename G::element_type>;
  { g.name() } -> std::convertible_to<std::string>;
} && std::totally_ordered<typename G::element_type>;

template <Group G>
using element_t = typename G::element_type;

/// All k-th roots of an element; `complete` is false when the list came from
/// a bounded search and may miss roots outside the bound.
template <class E>
struct RootSet {
  std::vector<E> roots;
  bool complete = true;
};

template <class G>
concept HasRoots = Group<G> && requires(const G& g, const element_t<G>& x, const BigInt& k) {
  { g.roots(x, k) } -> std::same_as<RootSet<element_t<G>>>;
};

template <class G>
concept HasLength = Group<G> && requires(const G& g, const element_t<G>& x) {
  { g.length(x) } -> std::convertible_to<BigInt>;
};

/// Enumeration of the closed ball { x : length(x) <= n }.
template <class G>
concept HasBall = HasLength<G> && requires(const G& g, std::uint64_t n) {
  { g.ball(n) } -> std::same_as<std::vector<element_t<G>>>;
};

/// A fixed enumeration g_1 = 1, g_2, ... of a countable group; enumerate(c)
/// returns its first c terms.
template <class G>
concept Enumerable = Group<G> && requires(const G& g, std::size_t count) {
  { g.enumerate(count) } -> std::same_as<std::vector<element_t<G>>>;
};

// Run-time capability queries. Type-erased groups satisfy the concepts
// syntactically and report the wrapped group's capabilities here.
template <Group G>
bool supports_roots(const G& g) {
  if constexpr (!HasRoots<G>) {
    return false;
  } else if constexpr (requires { g.has_roots(); }) {
    return g.has_roots();
  } else {
    return true;
  }
}

template <Group G>
bool supports_length(const G& g) {
  if constexpr (!HasLength<G>) {
    return false;
  } else if constexpr (requires { g.has_length(); }) {
    return g.has_length();
  } else {
    return true;
  }
}

template <Group G>
bool supports_ball(const G& g) {
  if constexpr (!HasBall<G>) {
    return false;
  } else if constexpr (requires { g.has_ball(); }) {
    return g.has_ball();
  } else {
    return true;
  }
}

template <Group G>
bool supports_enumeration(const G& g) {
  if constexpr (!Enumerable<G>) {
    return false;
  } else if constexpr (requires { g.has_enumeration(); }) {
    return g.has_enumeration();
  } else {
    return true;
  }
}

template <Group G>
bool is_identity(const G& g, const element_t<G>& x) {
  return x == g.identity();
}

/// Square-and-multiply; negative exponents use the inverse.
template <Group G>
element_t<G> power(const G& g, const element_t<G>& x, const BigInt& q) {
  if (q < 0) {
    return power(g, g.inverse(x), BigInt(-q));
  }
  element_t<G> result = g.identity();
  element_t<G> base = x;
  BigInt e = q;
  while (e != 0) {
    if ((e & 1) != 0) {
      result = g.multiply(result, base);
    }
    e >>= 1;
    if (e != 0) {
      base = g.multiply(base, base);
    }
  }
  return result;
}

/// A subset given by a membership predicate, optionally with a finite
/// enumeration (sorted, duplicate free). The enumeration may be produced
/// lazily on first use.
template <class E>
class ElementSet {
 public:
  explicit ElementSet(std::function<bool(const E&)> contains)
      : contains_(std::move(contains)) {}

  static ElementSet finite(std::vector<E> elements) {
    ElementSet set(nullptr);
    set.enumeration_ = std::make_shared<Enumeration>();
    set.enumeration_->elements = normalized(std::move(elements));
    set.enumeration_->ready = true;
    return set;
  }

  static ElementSet with_enumeration(std::function<bool(const E&)> contains,
                                     std::vector<E> elements) {
    ElementSet set = finite(std::move(elements));
    set.contains_ = std::move(contains);
    return set;
  }

  static ElementSet with_lazy_enumeration(std::function<bool(const E&)> contains,
                                          std::function<std::vector<E>()> make) {
    ElementSet set(std::move(contains));
    set.enumeration_ = std::make_shared<Enumeration>();
    set.enumeration_->make = std::move(make);
    return set;
  }

  bool contains(const E& x) const {
    if (contains_) {
      return contains_(x);
    }
    const auto& xs = elements();
    return std::binary_search(xs.begin(), xs.end(), x);
  }

  bool enumerable() const { return enumeration_ != nullptr; }

  const std::vector<E>& elements() const {
    if (!enumeration_) {
      throw Unsupported("this set has no finite enumeration");
    }
    std::lock_guard lock(enumeration_->mu);
    if (!enumeration_->ready) {
      enumeration_->elements = normalized(enumeration_->make());
      enumeration_->ready = true;
      enumeration_->make = nullptr;
    }
    return enumeration_->elements;
  }

 private:
  struct Enumeration {
    std::mutex mu;
    bool ready = false;
    std::function<std::vector<E>()> make;
    std::vector<E> elements;
  };

  static std::vector<E> normalized(std::vector<E> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return elements;
  }

  std::function<bool(const E&)> contains_;
  std::shared_ptr<Enumeration> enumeration_;
};

}  // namespace slender
