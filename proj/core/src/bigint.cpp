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

#include "slender/bigint.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace slender {

EuclidResult euclid_divmod(const BigInt& a, const BigInt& d) {
  if (d == 0) {
    throw std::domain_error("euclid_divmod: division by zero");
  }
  BigInt q = a / d;  // truncates toward zero
  BigInt r = a - q * d;
  if (r < 0) {
    if (d > 0) {
      q -= 1;
      r += d;
    } else {
      q += 1;
      r -= d;
    }
  }
  return {std::move(q), std::move(r)};
}

bool divides(const BigInt& d, const BigInt& a) {
  if (d == 0) {
    return a == 0;
  }
  return a % d == 0;
}

BigInt parse_bigint(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
  }
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (!std::isdigit(c)) {
      throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) {
  auto num = boost::multiprecision::numerator(value);
  auto den = boost::multiprecision::denominator(value);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

std::int64_t to_int64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer does not fit in 64 bits: " + value.str());
  }
  return value.convert_to<std::int64_t>();
}

std::uint64_t to_uint64(const BigInt& value) {
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("integer does not fit in unsigned 64 bits: " + value.str());
  }
  return value.convert_to<std::uint64_t>();
}

BigInt pow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent != 0) {
    if (exponent & 1U) {
      result *= b;
    }
    exponent >>= 1U;
    if (exponent != 0) {
      b *= b;
    }
  }
  return result;
}

}  // namespace slender
