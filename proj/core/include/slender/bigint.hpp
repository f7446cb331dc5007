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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace slender {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Euclidean division: a = q * d + r with 0 <= r < |d|.
struct EuclidResult {
  BigInt quotient;
  BigInt remainder;
};

EuclidResult euclid_divmod(const BigInt& a, const BigInt& d);

bool divides(const BigInt& d, const BigInt& a);

// Parses an optionally signed decimal integer. Throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

// Throws std::overflow_error when the value does not fit.
std::int64_t to_int64(const BigInt& value);
std::uint64_t to_uint64(const BigInt& value);

BigInt pow(const BigInt& base, std::uint64_t exponent);

}  // namespace slender
