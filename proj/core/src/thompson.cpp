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

#include "slender/thompson.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace slender::thompson {

namespace {

using Reason = ThompsonError::Reason;

std::uint64_t trailing_zeros(const BigInt& v) {
  return v == 0 ? 0 : static_cast<std::uint64_t>(boost::multiprecision::lsb(abs(v)));
}

bool is_power_of_two(const BigInt& v) {
  return v > 0 && boost::multiprecision::lsb(v) == boost::multiprecision::msb(v);
}

// log2(dy / dx) for positive dyadics, or nullopt when not a power of two.
std::optional<std::int64_t> log2_ratio(const Dyadic& dy, const Dyadic& dx) {
  std::uint64_t ay = trailing_zeros(dy.numerator());
  std::uint64_t ax = trailing_zeros(dx.numerator());
  BigInt oy = dy.numerator() >> ay;
  BigInt ox = dx.numerator() >> ax;
  if (oy != ox) {
    return std::nullopt;
  }
  return static_cast<std::int64_t>(ay) - static_cast<std::int64_t>(ax) +
         static_cast<std::int64_t>(dx.exponent()) - static_cast<std::int64_t>(dy.exponent());
}

}  // namespace

Dyadic::Dyadic(BigInt numerator, std::uint64_t exponent)
    : numerator_(std::move(numerator)), exponent_(exponent) {
  if (numerator_ == 0) {
    exponent_ = 0;
    return;
  }
  std::uint64_t shift = std::min(trailing_zeros(numerator_), exponent_);
  numerator_ >>= shift;
  exponent_ -= shift;
}

Dyadic Dyadic::from_rational(const Rational& value) {
  BigInt den = boost::multiprecision::denominator(value);
  if (!is_power_of_two(den)) {
    throw ThompsonError(Reason::non_dyadic, "coordinate " + slender::to_string(value) +
                                                " is not a dyadic rational");
  }
  return Dyadic(boost::multiprecision::numerator(value),
                static_cast<std::uint64_t>(boost::multiprecision::msb(den)));
}

Dyadic Dyadic::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  try {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Dyadic(parse_bigint(text), 0);
    }
    BigInt num = parse_bigint(trim(text.substr(0, slash)));
    std::string_view den = trim(text.substr(slash + 1));
    if (den.size() > 2 && den.substr(0, 2) == "2^") {
      BigInt e = parse_bigint(den.substr(2));
      if (e < 0) {
        throw std::invalid_argument("negative exponent");
      }
      return Dyadic(std::move(num), to_uint64(e));
    }
    BigInt d = parse_bigint(den);
    if (d == 0) {
      throw std::invalid_argument("zero denominator");
    }
    return from_rational(Rational(num, d));
  } catch (const ThompsonError&) {
    throw;
  } catch (const std::exception&) {
    throw ThompsonError(Reason::malformed, "malformed dyadic '" + std::string(text) + "'");
  }
}

Rational Dyadic::to_rational() const {
  return Rational(numerator_, BigInt(1) << exponent_);
}

Dyadic Dyadic::scaled(std::int64_t shift) const {
  if (shift < 0) {
    return Dyadic(numerator_, exponent_ + static_cast<std::uint64_t>(-shift));
  }
  auto s = static_cast<std::uint64_t>(shift);
  if (exponent_ >= s) {
    return Dyadic(numerator_, exponent_ - s);
  }
  return Dyadic(numerator_ << (s - exponent_), 0);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  std::uint64_t e = std::max(a.exponent_, b.exponent_);
  return Dyadic((a.numerator_ << (e - a.exponent_)) + (b.numerator_ << (e - b.exponent_)), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
  std::uint64_t e = std::max(a.exponent_, b.exponent_);
  return Dyadic((a.numerator_ << (e - a.exponent_)) - (b.numerator_ << (e - b.exponent_)), e);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  std::uint64_t e = std::max(a.exponent_, b.exponent_);
  BigInt lhs = a.numerator_ << (e - a.exponent_);
  BigInt rhs = b.numerator_ << (e - b.exponent_);
  return lhs.compare(rhs) <=> 0;
}

std::string Dyadic::to_string() const {
  return numerator_.str() + "/2^" + std::to_string(exponent_);
}

PLMap::PLMap()
    : points_{{Dyadic(0, 0), Dyadic(0, 0)}, {Dyadic(1, 0), Dyadic(1, 0)}}, slopes_{0} {}

PLMap::PLMap(std::vector<Breakpoint> points, std::vector<std::int64_t> slopes)
    : points_(std::move(points)), slopes_(std::move(slopes)) {}

Dyadic PLMap::operator()(const Dyadic& x) const {
  if (x < points_.front().x || x > points_.back().x) {
    throw ThompsonError(Reason::malformed, "evaluation outside [0, 1]");
  }
  auto it = std::upper_bound(points_.begin(), points_.end(), x,
                             [](const Dyadic& v, const Breakpoint& p) { return v < p.x; });
  std::size_t i = static_cast<std::size_t>(it - points_.begin());
  if (i == points_.size()) {
    return points_.back().y;
  }
  const Breakpoint& left = points_[i - 1];
  return left.y + (x - left.x).scaled(slopes_[i - 1]);
}

Dyadic PLMap::inverse_at(const Dyadic& y) const {
  if (y < points_.front().y || y > points_.back().y) {
    throw ThompsonError(Reason::malformed, "inverse evaluation outside [0, 1]");
  }
  auto it = std::upper_bound(points_.begin(), points_.end(), y,
                             [](const Dyadic& v, const Breakpoint& p) { return v < p.y; });
  std::size_t i = static_cast<std::size_t>(it - points_.begin());
  if (i == points_.size()) {
    return points_.back().x;
  }
  const Breakpoint& left = points_[i - 1];
  return left.x + (y - left.y).scaled(-slopes_[i - 1]);
}

// Drops breakpoints between pieces of equal slope. Input must already be a
// valid increasing dyadic breakpoint list with power-of-two slopes.
PLMap canonical_map(std::vector<Breakpoint> points) {
  std::vector<Breakpoint> kept;
  std::vector<std::int64_t> slopes;
  kept.push_back(points.front());
  for (std::size_t i = 1; i < points.size(); ++i) {
    auto s = log2_ratio(points[i].y - points[i - 1].y, points[i].x - points[i - 1].x);
    if (!s) {
      throw ThompsonError(Reason::non_power_of_two_slope,
                          "slope between breakpoints is not a power of two");
    }
    if (!slopes.empty() && slopes.back() == *s) {
      kept.back() = points[i];
    } else {
      kept.push_back(points[i]);
      slopes.push_back(*s);
    }
  }
  return PLMap(std::move(kept), std::move(slopes));
}

PLMap pl_validate(std::span<const Breakpoint> candidate) {
  if (candidate.size() < 2) {
    throw ThompsonError(Reason::endpoints_not_fixed, "a map needs at least the endpoints");
  }
  const Dyadic zero(0, 0);
  const Dyadic one(1, 0);
  if (!(candidate.front().x == zero && candidate.front().y == zero &&
        candidate.back().x == one && candidate.back().y == one)) {
    throw ThompsonError(Reason::endpoints_not_fixed, "map must send 0 to 0 and 1 to 1");
  }
  for (std::size_t i = 1; i < candidate.size(); ++i) {
    if (!(candidate[i - 1].x < candidate[i].x) || !(candidate[i - 1].y < candidate[i].y)) {
      throw ThompsonError(Reason::not_increasing, "breakpoints must be strictly increasing");
    }
  }
  return canonical_map(std::vector<Breakpoint>(candidate.begin(), candidate.end()));
}

PLMap pl_validate(std::span<const std::pair<Rational, Rational>> candidate) {
  std::vector<Breakpoint> points;
  points.reserve(candidate.size());
  for (const auto& [x, y] : candidate) {
    points.push_back({Dyadic::from_rational(x), Dyadic::from_rational(y)});
  }
  return pl_validate(points);
}

PLMap pl_compose(const PLMap& f, const PLMap& g) {
  std::vector<Dyadic> xs;
  xs.reserve(f.breakpoints().size() + g.breakpoints().size());
  for (const auto& p : g.breakpoints()) {
    xs.push_back(p.x);
  }
  for (const auto& p : f.breakpoints()) {
    xs.push_back(g.inverse_at(p.x));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Breakpoint> points;
  points.reserve(xs.size());
  for (auto& x : xs) {
    Dyadic y = f(g(x));
    points.push_back({std::move(x), std::move(y)});
  }
  return canonical_map(std::move(points));
}

PLMap pl_invert(const PLMap& f) {
  std::vector<Breakpoint> points;
  points.reserve(f.breakpoints().size());
  for (const auto& p : f.breakpoints()) {
    points.push_back({p.y, p.x});
  }
  return canonical_map(std::move(points));
}

PLMap pl_multiply(const PLMap& u, const PLMap& v) { return pl_compose(v, u); }

PLMap pl_power(const PLMap& f, const BigInt& q) {
  if (q < 0) {
    return pl_power(pl_invert(f), -q);
  }
  PLMap result;
  PLMap base = f;
  BigInt e = q;
  while (e != 0) {
    if ((e & 1) != 0) {
      result = pl_compose(result, base);
    }
    e >>= 1;
    if (e != 0) {
      base = pl_compose(base, base);
    }
  }
  return result;
}

PLMap generator(std::uint64_t n) {
  // Support [1 - 2^-n, 1] of length 2^-n.
  const Dyadic one(1, 0);
  const Dyadic length(1, n);
  const Dyadic start = one - length;
  std::vector<Breakpoint> points;
  if (n > 0) {
    points.push_back({Dyadic(0, 0), Dyadic(0, 0)});
  }
  points.push_back({start, start});
  points.push_back({start + length.scaled(-2), start + length.scaled(-1)});
  points.push_back({start + length.scaled(-1), start + Dyadic(3, n + 2)});
  points.push_back({one, one});
  return pl_validate(points);
}

namespace {

// Grid maps as integer piece heights: piece i rises by c_i / 2^(2 depth) with
// c_i = 2^(s_i + depth), and the heights sum to 2^(2 depth).
void for_each_grid_map(std::uint64_t depth, const std::function<void(const PLMap&)>& visit) {
  if (depth > 12) {
    throw ThompsonError(Reason::malformed, "grid depth above 12 is not supported");
  }
  const std::uint64_t cells = std::uint64_t{1} << depth;
  const std::uint64_t total = std::uint64_t{1} << (2 * depth);
  const std::uint64_t max_height = total;  // s = depth
  std::vector<std::uint64_t> heights;
  heights.reserve(cells);
  std::function<void(std::uint64_t)> recurse = [&](std::uint64_t used) {
    std::uint64_t placed = heights.size();
    if (placed == cells) {
      if (used != total) {
        return;
      }
      std::vector<Breakpoint> points;
      points.reserve(cells + 1);
      std::uint64_t y = 0;
      points.push_back({Dyadic(0, 0), Dyadic(0, 0)});
      for (std::uint64_t i = 0; i < cells; ++i) {
        y += heights[i];
        points.push_back({Dyadic(i + 1, depth), Dyadic(y, 2 * depth)});
      }
      visit(canonical_map(std::move(points)));
      return;
    }
    std::uint64_t remaining_cells = cells - placed - 1;
    for (std::uint64_t h = 1; h <= max_height; h <<= 1) {
      std::uint64_t after = used + h;
      if (after > total) {
        break;
      }
      std::uint64_t left = total - after;
      if (left < remaining_cells || left > remaining_cells * max_height) {
        continue;
      }
      heights.push_back(h);
      recurse(after);
      heights.pop_back();
    }
  };
  recurse(0);
}

}  // namespace

std::vector<PLMap> pl_grid_family(std::uint64_t depth) {
  std::vector<PLMap> out;
  for_each_grid_map(depth, [&](const PLMap& h) { out.push_back(h); });
  return out;
}

std::vector<PLMap> pl_find_roots(const PLMap& g, std::uint64_t q, std::uint64_t depth) {
  if (q == 0) {
    throw ThompsonError(Reason::malformed, "pl_find_roots: q must be positive");
  }
  if (q == 1) {
    return {g};
  }
  std::vector<PLMap> roots;
  for_each_grid_map(depth, [&](const PLMap& h) {
    if (pl_power(h, q) == g) {
      roots.push_back(h);
    }
  });
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string to_string(const PLMap& f) {
  std::string out;
  for (const auto& p : f.breakpoints()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += '(' + p.x.to_string() + ", " + p.y.to_string() + ')';
  }
  return out;
}

}  // namespace slender::thompson
