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

// Radicals, limiting sequence pairs and the diagonal index construction.
//
// A limiting sequence pair is a nested family F_1 <= F_2 <= ... covering G
// with exponents k_n such that
//   (1) for every g and n there is m with g F_n <= F_m,
//   (2) rad_{k_n}(F_n) = {1},
//   (3) rad_{k_m}(F_n) <= F_n whenever m <= n.
// translate(g, n) is an explicit m for (1).

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "slender/bigint.hpp"
#include "slender/catalog.hpp"
#include "slender/group.hpp"
#include "slender/word.hpp"

namespace slender::lsp {

class LspError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Radicals

template <class E>
struct RadicalQuery {
  ElementSet<E> set;
  BigInt j = 1;
  // Elements to test when the set cannot be inverted through root extraction.
  std::optional<std::vector<E>> candidates;
};

template <class E>
struct RadicalResult {
  ElementSet<E> set;
  bool complete = true;
};

/// rad_j(S) = { g : g^j in S }. Exact when S is enumerable and the group
/// extracts roots; otherwise restricted to the given candidates.
template <Group G>
RadicalResult<element_t<G>> radical(const G& g, const RadicalQuery<element_t<G>>& q) {
  using E = element_t<G>;
  if (q.j < 1) {
    throw LspError("radical: j must be positive");
  }
  if (q.j == 1) {
    return {q.set, true};
  }
  if (q.set.enumerable() && supports_roots(g)) {
    if constexpr (HasRoots<G>) {
      std::vector<E> out;
      bool complete = true;
      for (const auto& y : q.set.elements()) {
        auto found = g.roots(y, q.j);
        complete = complete && found.complete;
        out.insert(out.end(), found.roots.begin(), found.roots.end());
      }
      return {ElementSet<E>::finite(std::move(out)), complete};
    }
  }
  if (q.candidates) {
    std::vector<E> out;
    for (const auto& x : *q.candidates) {
      if (q.set.contains(power(g, x, q.j))) {
        out.push_back(x);
      }
    }
    return {ElementSet<E>::finite(std::move(out)), false};
  }
  throw LspError("radical: unbounded candidate space (no enumeration, roots or candidates)");
}

// ---------------------------------------------------------------------------
// Limiting sequence pairs

template <Group G>
struct LimitingSequencePair {
  using E = element_t<G>;

  G group;
  std::function<ElementSet<E>(std::uint64_t)> family;
  std::function<BigInt(std::uint64_t)> exponent;
  std::function<std::uint64_t(const E&, std::uint64_t)> translate;
  // translate(g, n) is the least m with g F_n <= F_m.
  bool translate_is_minimal = false;
  std::string description;

  ElementSet<E> F(std::uint64_t n) const { return family(n); }
  BigInt k(std::uint64_t n) const { return exponent(n); }
};

template <class E>
using Sampler = std::function<E(std::mt19937_64&)>;

namespace detail {

template <Group G>
std::vector<element_t<G>> probe_elements(const G& g, std::size_t count) {
  if (supports_enumeration(g)) {
    if constexpr (Enumerable<G>) {
      return g.enumerate(count);
    }
  }
  if (supports_ball(g)) {
    if constexpr (HasBall<G>) {
      for (std::uint64_t r = 1;; ++r) {
        auto ball = g.ball(r);
        if (ball.size() >= count || r >= 64) {
          return ball;
        }
      }
    }
  }
  return {g.identity()};
}

template <Group G>
void check_length_axioms(const G& g, const word::LengthFunction<element_t<G>>& l,
                         const std::vector<element_t<G>>& probes) {
  auto fail = [&](const std::string& why) {
    throw LspError(g.name() + ": length function rejected on samples: " + why);
  };
  if (l(g.identity()) != 0) {
    fail("l(1) != 0");
  }
  for (const auto& x : probes) {
    if (l(x) < 0 || l(x) != l(g.inverse(x))) {
      fail("l(x) != l(x^-1) at x = " + g.format(x));
    }
    for (const auto& y : probes) {
      if (l(g.multiply(x, y)) > l(x) + l(y)) {
        fail("triangle inequality at x = " + g.format(x) + ", y = " + g.format(y));
      }
    }
  }
}

}  // namespace detail

/// Closed balls F_n = B(1, n) for a Dudley norm with k_n = n + 1. Uses the
/// group's own length function, so balls are enumerable when the group can
/// list them. The Dudley inequality l(g^j) >= max(j, l(g)) is checked on
/// `probe_count` elements for j <= 20.
template <Group G>
LimitingSequencePair<G> lsp_from_dudley(const G& g, std::size_t probe_count = 64) {
  using E = element_t<G>;
  auto l = catalog::group_length_function(g, word::LengthKind::dudley);
  auto probes = detail::probe_elements(g, probe_count);
  detail::check_length_axioms(g, l, probes);
  for (const auto& x : probes) {
    if (x == g.identity()) {
      continue;
    }
    BigInt lx = l(x);
    E p = x;
    for (std::uint64_t j = 1; j <= 20; ++j, p = g.multiply(p, x)) {
      if (l(p) < std::max(BigInt(j), lx)) {
        throw LspError(g.name() + ": not a Dudley norm: l(x^" + std::to_string(j) +
                       ") too small at x = " + g.format(x));
      }
    }
  }
  LimitingSequencePair<G> out{g,
                              [g](std::uint64_t n) { return catalog::ball(g, n); },
                              [](std::uint64_t n) { return BigInt(n + 1); },
                              [l](const E& x, std::uint64_t n) {
                                return to_uint64(l(x)) + n;
                              },
                              false,
                              "dudley balls on " + g.name()};
  return out;
}

/// F_n = B(1, n), k_n = k^n for a length function with l(g^k) >= l(g) + 1.
template <Group G>
LimitingSequencePair<G> lsp_from_monotone(const G& g, std::uint64_t k,
                                          std::size_t probe_count = 64) {
  using E = element_t<G>;
  if (k < 2) {
    throw LspError("uniformly monotone construction needs k >= 2");
  }
  auto l = catalog::group_length_function(g, word::LengthKind::uniformly_monotone, k);
  auto probes = detail::probe_elements(g, probe_count);
  detail::check_length_axioms(g, l, probes);
  for (const auto& x : probes) {
    if (x != g.identity() && l(power(g, x, BigInt(k))) < l(x) + 1) {
      throw LspError(g.name() + ": not uniformly monotone with k = " + std::to_string(k) +
                     " at x = " + g.format(x));
    }
  }
  LimitingSequencePair<G> out{g,
                              [g](std::uint64_t n) { return catalog::ball(g, n); },
                              [k](std::uint64_t n) { return pow(BigInt(k), n); },
                              [l](const E& x, std::uint64_t n) {
                                return to_uint64(l(x)) + n;
                              },
                              false,
                              "monotone balls (k=" + std::to_string(k) + ") on " + g.name()};
  return out;
}

struct AntecedentOptions {
  catalog::AntecedentLimits limits;
  // Largest enumeration prefix searched when locating translates.
  std::size_t enumeration_cap = std::size_t{1} << 20;
};

namespace detail {

// Shared, lazily grown state of an antecedent LSP. F_n is the union of
// Ant_k(g_i) for i <= n; every element records the first n with x in F_n.
template <Group G>
class AntecedentState : public std::enable_shared_from_this<AntecedentState<G>> {
 public:
  using E = element_t<G>;

  AntecedentState(G g, BigInt k, AntecedentOptions options)
      : group_(std::move(g)), k_(std::move(k)), options_(options) {
    sizes_.push_back(0);
  }

  const G& group() const { return group_; }

  ElementSet<E> family(std::uint64_t n) {
    std::lock_guard lock(mu_);
    grow_families(n);
    std::vector<E> elements(members_.begin(), members_.begin() + sizes_[n]);
    auto self = this->shared_from_this();
    return ElementSet<E>::with_enumeration(
        [self, n](const E& x) { return self->first_family(x) <= n; }, std::move(elements));
  }

  bool complete() {
    std::lock_guard lock(mu_);
    return complete_;
  }

  /// Least n with x in F_n, or UINT64_MAX when x is not among the families
  /// built so far.
  std::uint64_t first_family(const E& x) {
    std::lock_guard lock(mu_);
    return lookup(x);
  }

  BigInt exponent(std::uint64_t n) {
    std::lock_guard lock(mu_);
    grow_families(n);
    if (auto it = exponents_.find(n); it != exponents_.end()) {
      return it->second;
    }
    // Every x with x^(k^j) in F_n lies in F_n by antecedent closure, and the
    // j with x^(k^j) in F_n form an initial segment; k_n = k^(1 + max j).
    std::uint64_t max_j = 0;
    for (std::size_t i = 0; i < sizes_[n]; ++i) {
      const E& x = members_[i];
      if (x == group_.identity()) {
        continue;
      }
      std::uint64_t j = 0;
      E y = power(group_, x, k_);
      while (lookup(y) <= n) {
        ++j;
        y = power(group_, y, k_);
      }
      max_j = std::max(max_j, j);
    }
    BigInt value = pow(k_, max_j + 1);
    exponents_.emplace(n, value);
    return value;
  }

  std::uint64_t translate(const E& g, std::uint64_t n) {
    std::lock_guard lock(mu_);
    grow_families(n);
    std::uint64_t needed = 1;
    for (std::size_t i = 0; i < sizes_[n]; ++i) {
      needed = std::max(needed, locate(group_.multiply(g, members_[i])));
    }
    return needed;
  }

 private:
  std::uint64_t lookup(const E& x) const {
    auto it = first_.find(x);
    return it == first_.end() ? UINT64_MAX : it->second;
  }

  void ensure_enumerated(std::size_t count) {
    if (enumeration_.size() >= count) {
      return;
    }
    if (count > options_.enumeration_cap) {
      throw LspError("enumeration of " + group_.name() + " exceeds the cap of " +
                     std::to_string(options_.enumeration_cap) + " elements");
    }
    std::size_t target = std::min(options_.enumeration_cap,
                                  std::max(count, 2 * enumeration_.size() + 16));
    enumeration_ = group_.enumerate(target);
    if (enumeration_.empty() || enumeration_.front() != group_.identity()) {
      throw LspError("the enumeration of " + group_.name() + " must start with the identity");
    }
    for (std::size_t i = index_.size(); i < enumeration_.size(); ++i) {
      index_.emplace(enumeration_[i], i + 1);
    }
  }

  void grow_families(std::uint64_t n) {
    if (n == 0) {
      throw LspError("antecedent families are indexed from n = 1");
    }
    while (sizes_.size() <= n) {
      std::uint64_t i = sizes_.size();
      ensure_enumerated(i);
      auto ant = catalog::antecedents(group_, enumeration_[i - 1], k_, options_.limits);
      complete_ = complete_ && ant.complete;
      for (auto& h : ant.elements) {
        if (first_.emplace(h, i).second) {
          members_.push_back(std::move(h));
        }
      }
      sizes_.push_back(members_.size());
    }
  }

  // Least n with y in F_n, growing the families as needed.
  std::uint64_t locate(const E& y) {
    if (auto known = lookup(y); known != UINT64_MAX) {
      return known;
    }
    // y = g_i for some i, and g_i in F_i.
    auto it = index_.find(y);
    while (it == index_.end()) {
      ensure_enumerated(enumeration_.size() + 1);
      it = index_.find(y);
    }
    grow_families(it->second);
    return lookup(y);
  }

  G group_;
  BigInt k_;
  AntecedentOptions options_;
  std::recursive_mutex mu_;
  std::vector<E> enumeration_;
  std::map<E, std::uint64_t> index_;  // 1-based enumeration position
  std::map<E, std::uint64_t> first_;
  std::vector<E> members_;          // in order of first appearance
  std::vector<std::size_t> sizes_;  // |F_n|
  std::map<std::uint64_t, BigInt> exponents_;
  bool complete_ = true;
};

}  // namespace detail

/// F_n = Ant_k{g_1, ..., g_n} over the group's enumeration g_1 = 1, g_2, ...
/// with k_n the least power k^m that makes (2) hold on the finite F_n.
template <Group G>
LimitingSequencePair<G> lsp_from_antecedents(const G& g, const BigInt& k,
                                             AntecedentOptions options = {}) {
  using E = element_t<G>;
  if (k < 2) {
    throw LspError("antecedent construction needs k >= 2");
  }
  if (!supports_enumeration(g) || !supports_roots(g)) {
    throw LspError(g.name() + " needs an enumeration and root extraction");
  }
  auto state = std::make_shared<detail::AntecedentState<G>>(g, k, options);
  state->family(1);  // surfaces divergence early
  LimitingSequencePair<G> out{g,
                              [state](std::uint64_t n) { return state->family(n); },
                              [state](std::uint64_t n) { return state->exponent(n); },
                              [state](const E& x, std::uint64_t n) {
                                return state->translate(x, n);
                              },
                              true,
                              to_string(k) + "-antecedents on " + g.name()};
  return out;
}

/// The same pair with every k_n replaced by `k`; used to exhibit failures.
template <Group G>
LimitingSequencePair<G> with_forced_exponent(LimitingSequencePair<G> lsp, const BigInt& k) {
  lsp.exponent = [k](std::uint64_t) { return k; };
  lsp.description += " (k_n forced to " + to_string(k) + ")";
  return lsp;
}

// ---------------------------------------------------------------------------
// Checking

enum class CheckMode { exhaustive, bounded, sampled };

inline const char* mode_name(CheckMode mode) {
  switch (mode) {
    case CheckMode::exhaustive:
      return "exhaustive";
    case CheckMode::bounded:
      return "bounded";
    case CheckMode::sampled:
      return "sampled";
  }
  return "?";
}

struct ConditionResult {
  std::string condition;  // nested, cond1, cond2, cond3
  std::uint64_t n = 0;
  bool pass = true;
  CheckMode mode = CheckMode::exhaustive;
  std::size_t checks = 0;
  std::string witness;
};

struct LspReport {
  std::string description;
  std::vector<ConditionResult> results;

  bool all_pass() const {
    return std::all_of(results.begin(), results.end(),
                       [](const ConditionResult& r) { return r.pass; });
  }

  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(
        results.begin(), results.end(), [](const ConditionResult& r) { return !r.pass; }));
  }

  std::string to_text() const {
    std::ostringstream out;
    out << "# " << description << "\n";
    for (const auto& r : results) {
      out << r.condition << " n=" << r.n << " " << (r.pass ? "PASS" : "FAIL") << " "
          << mode_name(r.mode) << " checks=" << r.checks;
      if (!r.pass) {
        out << " witness: " << r.witness;
      }
      out << "\n";
    }
    return out.str();
  }
};

template <class E>
struct CheckOptions {
  std::uint64_t n_min = 1;
  std::uint64_t n_max = 10;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  bool force_sampling = false;
  // Random group elements for sampled checks; defaults to a uniform pick
  // from a prefix of the group's enumeration or a ball.
  Sampler<E> sampler;
  // Translation probes g for (1) in addition to the elements of F_n.
  std::size_t probe_count = 16;
};

namespace detail {

template <Group G>
Sampler<element_t<G>> default_sampler(const G& g, std::size_t prefix) {
  auto pool = std::make_shared<const std::vector<element_t<G>>>(probe_elements(g, prefix));
  return [pool](std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, pool->size() - 1);
    return (*pool)[pick(rng)];
  };
}

}  // namespace detail

/// Checks nestedness and conditions (1)-(3) for n_min <= n <= n_max. With an
/// enumerable F_n and exact roots every quantifier over F_n and over
/// rad_k(F_n) is exhausted; condition (1) then covers g in F_n plus the probe
/// elements. Bounded means root sets came from a bounded search.
template <Group G>
LspReport lsp_check(const LimitingSequencePair<G>& lsp, CheckOptions<element_t<G>> opts = {}) {
  using E = element_t<G>;
  const G& g = lsp.group;
  const E one = g.identity();
  std::mt19937_64 rng(opts.seed);
  Sampler<E> sample = opts.sampler ? opts.sampler : detail::default_sampler(g, 512);
  auto probes = detail::probe_elements(g, opts.probe_count);

  LspReport report;
  report.description = lsp.description;
  std::map<std::uint64_t, ElementSet<E>> families;
  auto F = [&](std::uint64_t n) -> const ElementSet<E>& {
    auto it = families.find(n);
    if (it == families.end()) {
      it = families.emplace(n, lsp.family(n)).first;
    }
    return it->second;
  };

  // A random element of F_n, or nullopt if none was found.
  auto sample_member = [&](const ElementSet<E>& set) -> std::optional<E> {
    if (set.enumerable()) {
      const auto& xs = set.elements();
      std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
      return xs[pick(rng)];
    }
    for (int tries = 0; tries < 256; ++tries) {
      E x = sample(rng);
      if (set.contains(x)) {
        return x;
      }
    }
    return std::nullopt;
  };

  for (std::uint64_t n = opts.n_min; n <= opts.n_max; ++n) {
    const ElementSet<E>& Fn = F(n);
    const ElementSet<E>& Fnext = F(n + 1);
    const BigInt kn = lsp.k(n);
    const bool exhaustive = Fn.enumerable() && !opts.force_sampling;
    const bool roots_ok = exhaustive && supports_roots(g);

    // Nested.
    {
      ConditionResult r{"nested", n, true, exhaustive ? CheckMode::exhaustive : CheckMode::sampled, 0, {}};
      auto test = [&](const E& x) {
        ++r.checks;
        if (r.pass && !Fnext.contains(x)) {
          r.pass = false;
          r.witness = g.format(x) + " in F_" + std::to_string(n) + " but not in F_" +
                      std::to_string(n + 1);
        }
      };
      if (exhaustive) {
        for (const auto& x : Fn.elements()) {
          test(x);
        }
      } else {
        for (std::size_t s = 0; s < opts.samples && r.pass; ++s) {
          if (auto x = sample_member(Fn)) {
            test(*x);
          }
        }
      }
      report.results.push_back(std::move(r));
    }

    // (1) g F_n <= F_translate(g, n).
    {
      ConditionResult r{"cond1", n, true, exhaustive ? CheckMode::exhaustive : CheckMode::sampled, 0, {}};
      auto test = [&](const E& h, const E& x) {
        ++r.checks;
        std::uint64_t m = lsp.translate(h, n);
        E hx = g.multiply(h, x);
        if (r.pass && !F(m).contains(hx)) {
          r.pass = false;
          r.witness = "g = " + g.format(h) + ", x = " + g.format(x) + ": gx = " + g.format(hx) +
                      " not in F_" + std::to_string(m);
        }
      };
      if (exhaustive) {
        std::vector<E> shifts = Fn.elements();
        shifts.insert(shifts.end(), probes.begin(), probes.end());
        for (const auto& p : probes) {
          shifts.push_back(g.inverse(p));
        }
        std::sort(shifts.begin(), shifts.end());
        shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());
        for (const auto& h : shifts) {
          for (const auto& x : Fn.elements()) {
            test(h, x);
            if (!r.pass) {
              break;
            }
          }
          if (!r.pass) {
            break;
          }
        }
      } else {
        for (std::size_t s = 0; s < opts.samples && r.pass; ++s) {
          E h = sample(rng);
          if (auto x = sample_member(Fn)) {
            test(h, *x);
          }
        }
      }
      report.results.push_back(std::move(r));
    }

    // (2) rad_{k_n}(F_n) = {1}.
    {
      ConditionResult r{"cond2", n, true, CheckMode::sampled, 0, {}};
      if (!Fn.contains(one)) {
        r.pass = false;
        r.witness = "identity not in F_" + std::to_string(n);
      }
      if (roots_ok) {
        if constexpr (HasRoots<G>) {
          r.mode = CheckMode::exhaustive;
          for (const auto& y : Fn.elements()) {
            auto found = g.roots(y, kn);
            if (!found.complete) {
              r.mode = CheckMode::bounded;
            }
            ++r.checks;
            for (const auto& x : found.roots) {
              if (x != one && r.pass) {
                r.pass = false;
                r.witness = "x = " + g.format(x) + " is not the identity but x^" + to_string(kn) + " = " +
                            g.format(y) + " in F_" + std::to_string(n);
              }
            }
          }
        }
      } else {
        for (std::size_t s = 0; s < opts.samples && r.pass; ++s) {
          E x = sample(rng);
          if (x == one) {
            continue;
          }
          ++r.checks;
          E y = power(g, x, kn);
          if (Fn.contains(y)) {
            r.pass = false;
            r.witness = "x = " + g.format(x) + " is not the identity but x^" + to_string(kn) + " = " +
                        g.format(y) + " in F_" + std::to_string(n);
          }
        }
      }
      report.results.push_back(std::move(r));
    }

    // (3) rad_{k_m}(F_n) <= F_n for m <= n.
    {
      ConditionResult r{"cond3", n, true, CheckMode::sampled, 0, {}};
      std::vector<BigInt> ks;
      for (std::uint64_t m = 1; m <= n; ++m) {
        ks.push_back(lsp.k(m));
      }
      std::sort(ks.begin(), ks.end());
      ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
      auto witness = [&](const E& x, const BigInt& km, const E& y) {
        return "x = " + g.format(x) + " not in F_" + std::to_string(n) + " but x^" +
               to_string(km) + " = " + g.format(y) + " is";
      };
      if (roots_ok) {
        if constexpr (HasRoots<G>) {
          r.mode = CheckMode::exhaustive;
          for (const auto& km : ks) {
            for (const auto& y : Fn.elements()) {
              auto found = g.roots(y, km);
              if (!found.complete) {
                r.mode = CheckMode::bounded;
              }
              ++r.checks;
              for (const auto& x : found.roots) {
                if (r.pass && !Fn.contains(x)) {
                  r.pass = false;
                  r.witness = witness(x, km, y);
                }
              }
            }
          }
        }
      } else {
        std::uniform_int_distribution<std::size_t> pick_k(0, ks.size() - 1);
        for (std::size_t s = 0; s < opts.samples && r.pass; ++s) {
          E x = sample(rng);
          const BigInt& km = ks[pick_k(rng)];
          ++r.checks;
          E y = power(g, x, km);
          if (Fn.contains(y) && !Fn.contains(x)) {
            r.pass = false;
            r.witness = witness(x, km, y);
          }
        }
      }
      report.results.push_back(std::move(r));
    }
    families.erase(n);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Diagonal indices and the nested product

struct DiagIndices {
  // j[n-1][s-1] = j_{n,s} for n >= s >= 1.
  std::vector<std::vector<std::uint64_t>> j;
  // m[n-1] = k_{j_{n,n}}.
  std::vector<BigInt> m;

  /// The indices in construction order j_{1,1}, j_{2,1}, j_{2,2}, j_{3,1}, ...
  std::vector<std::uint64_t> flattened() const {
    std::vector<std::uint64_t> out;
    for (const auto& row : j) {
      out.insert(out.end(), row.begin(), row.end());
    }
    return out;
  }
};

namespace detail {

// Least j >= lower with h F_src <= F_j.
template <Group G>
std::uint64_t pick_index(const LimitingSequencePair<G>& lsp, const element_t<G>& h,
                         std::uint64_t src, std::uint64_t lower) {
  std::uint64_t bound = std::max(lower, lsp.translate(h, src));
  if (lsp.translate_is_minimal) {
    return bound;
  }
  auto source = lsp.family(src);
  if (!source.enumerable()) {
    return bound;
  }
  std::vector<element_t<G>> image;
  image.reserve(source.elements().size());
  for (const auto& x : source.elements()) {
    image.push_back(lsp.group.multiply(h, x));
  }
  for (std::uint64_t j = lower; j <= bound; ++j) {
    auto target = lsp.family(j);
    if (std::all_of(image.begin(), image.end(),
                    [&](const element_t<G>& y) { return target.contains(y); })) {
      return j;
    }
  }
  throw LspError("translate(" + lsp.group.format(h) + ", " + std::to_string(src) +
                 ") is not a valid witness for condition (1)");
}

}  // namespace detail

/// The triangular index array behind the diagonal argument, each index the
/// least admissible one: j_{n,1} > j_{n-1,n-1} with g_1^-1 F_n <= F_{j_{n,1}}
/// and j_{n,s+1} > j_{n,s} with g_{s+1}^-1 F_{j_{n,s}} <= F_{j_{n,s+1}}.
template <Group G>
DiagIndices diag_indices(const LimitingSequencePair<G>& lsp, const std::vector<element_t<G>>& g,
                         std::uint64_t depth) {
  const auto& grp = lsp.group;
  if (g.size() < depth) {
    throw LspError("diag_indices needs " + std::to_string(depth) + " elements, got " +
                   std::to_string(g.size()));
  }
  for (std::size_t i = 0; i < depth; ++i) {
    if (g[i] == grp.identity()) {
      throw LspError("diag_indices: g_" + std::to_string(i + 1) + " is the identity");
    }
  }
  DiagIndices out;
  std::uint64_t previous = 1;  // j_{1,1} > 1
  for (std::uint64_t n = 1; n <= depth; ++n) {
    std::vector<std::uint64_t> row;
    std::uint64_t src = n;
    for (std::uint64_t s = 1; s <= n; ++s) {
      std::uint64_t j = detail::pick_index(lsp, grp.inverse(g[s - 1]), src, previous + 1);
      row.push_back(j);
      previous = j;
      src = j;
    }
    out.m.push_back(lsp.k(row.back()));
    out.j.push_back(std::move(row));
  }
  return out;
}

/// g_1 (g_2 ( ... g_{l-1} (g_l x^{m_l})^{m_{l-1}} ... )^{m_2})^{m_1}
template <Group G>
element_t<G> nested_product(const G& grp, const std::vector<element_t<G>>& g,
                            const std::vector<BigInt>& m, const element_t<G>& x) {
  if (g.size() != m.size()) {
    throw LspError("nested_product: element and exponent counts differ");
  }
  element_t<G> value = x;
  for (std::size_t i = g.size(); i-- > 0;) {
    value = grp.multiply(g[i], power(grp, value, m[i]));
  }
  return value;
}

struct LemmaReport {
  DiagIndices indices;
  std::size_t checks = 0;
  std::vector<std::string> violations;

  bool clean() const { return violations.empty(); }
};

/// For every l <= l_max and every sample x != 1, the nested product with the
/// diagonal exponents must fall outside F_l.
template <Group G>
LemmaReport big_lemma_harness(const LimitingSequencePair<G>& lsp,
                              const std::vector<element_t<G>>& g, std::uint64_t l_max,
                              const std::vector<element_t<G>>& x_samples) {
  const auto& grp = lsp.group;
  LemmaReport report;
  report.indices = diag_indices(lsp, g, l_max);
  for (std::uint64_t l = 1; l <= l_max; ++l) {
    std::vector<element_t<G>> gs(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(l));
    std::vector<BigInt> ms(report.indices.m.begin(),
                           report.indices.m.begin() + static_cast<std::ptrdiff_t>(l));
    auto Fl = lsp.family(l);
    for (const auto& x : x_samples) {
      if (x == grp.identity()) {
        continue;
      }
      ++report.checks;
      auto value = nested_product(grp, gs, ms, x);
      if (Fl.contains(value)) {
        report.violations.push_back("l = " + std::to_string(l) + ", x = " + grp.format(x) +
                                    ": nested product " + grp.format(value) + " lies in F_" +
                                    std::to_string(l));
      }
    }
  }
  return report;
}

}  // namespace slender::lsp
