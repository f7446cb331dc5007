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

// Thompson's group F as piecewise linear homeomorphisms of [0, 1] with
// dyadic breakpoints and power-of-two slopes.

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slender/bigint.hpp"

namespace slender::thompson {

class ThompsonError : public std::invalid_argument {
 public:
  enum class Reason {
    non_dyadic,
    non_power_of_two_slope,
    endpoints_not_fixed,
    not_increasing,
    malformed,
  };

  ThompsonError(Reason reason, const std::string& what)
      : std::invalid_argument(what), reason_(reason) {}

  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

/// numerator / 2^exponent in lowest terms.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(BigInt numerator, std::uint64_t exponent);

  static Dyadic from_rational(const Rational& value);
  /// Accepts "k/2^e", "p/q" and plain integers.
  static Dyadic parse(std::string_view text);

  const BigInt& numerator() const { return numerator_; }
  std::uint64_t exponent() const { return exponent_; }
  Rational to_rational() const;

  /// Multiplies by 2^shift.
  Dyadic scaled(std::int64_t shift) const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  /// "k/2^e"
  std::string to_string() const;

 private:
  BigInt numerator_ = 0;
  std::uint64_t exponent_ = 0;
};

struct Breakpoint {
  Dyadic x;
  Dyadic y;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
  friend std::strong_ordering operator<=>(const Breakpoint& a, const Breakpoint& b) {
    if (auto c = a.x <=> b.x; c != 0) {
      return c;
    }
    return a.y <=> b.y;
  }
};

/// A canonical element of F: fixes 0 and 1, strictly increasing, slopes are
/// powers of two and no breakpoint joins two pieces of equal slope.
class PLMap {
 public:
  PLMap();  // identity

  std::span<const Breakpoint> breakpoints() const { return points_; }
  /// log2 of the slope on each piece.
  std::span<const std::int64_t> slope_exponents() const { return slopes_; }
  bool is_identity() const { return points_.size() == 2; }

  Dyadic operator()(const Dyadic& x) const;
  Dyadic inverse_at(const Dyadic& y) const;

  friend bool operator==(const PLMap& a, const PLMap& b) { return a.points_ == b.points_; }
  friend std::strong_ordering operator<=>(const PLMap& a, const PLMap& b) {
    return std::lexicographical_compare_three_way(a.points_.begin(), a.points_.end(),
                                                  b.points_.begin(), b.points_.end());
  }

 private:
  friend PLMap canonical_map(std::vector<Breakpoint> points);
  PLMap(std::vector<Breakpoint> points, std::vector<std::int64_t> slopes);

  std::vector<Breakpoint> points_;
  std::vector<std::int64_t> slopes_;
};

PLMap pl_validate(std::span<const std::pair<Rational, Rational>> candidate);
PLMap pl_validate(std::span<const Breakpoint> candidate);

/// (f o g)(x) = f(g(x))
PLMap pl_compose(const PLMap& f, const PLMap& g);
PLMap pl_invert(const PLMap& f);

/// Group product with the left-to-right convention: apply u, then v.
PLMap pl_multiply(const PLMap& u, const PLMap& v);

/// q-fold composition; negative q composes the inverse.
PLMap pl_power(const PLMap& f, const BigInt& q);

/// x_0 has breakpoints (0,0) (1/4,1/2) (1/2,3/4) (1,1); x_n is the identity on
/// [0, 1 - 2^-n] and a rescaled copy of x_0 on the rest.
PLMap generator(std::uint64_t n);

/// Maps with breakpoints on the grid k/2^depth and slopes 2^s, |s| <= depth.
std::vector<PLMap> pl_grid_family(std::uint64_t depth);

/// Every h in the grid family of the given depth with h^q = g, sorted.
std::vector<PLMap> pl_find_roots(const PLMap& g, std::uint64_t q, std::uint64_t depth);

std::string to_string(const PLMap& f);

}  // namespace slender::thompson
