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

// JSON file formats.
//
//   Thompson element:  [["0", "0"], ["1/4", "1/2"], ...]   breakpoints
//   earring word:      {"depth": 3, "levels": ["a_1", "a_1 a_2", ...]}
//                      or {"depth": 3, "word": "a_1 a_2 a_3"}
//   diagonal spec:     {"depth": 4, "terms": [{"word": "a_2", "m": 3}, ...]}
//
// Coordinates are dyadic strings ("k/2^e", "p/q" or integers); exponents
// may be JSON integers or decimal strings.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "slender/bigint.hpp"
#include "slender/earring.hpp"
#include "slender/thompson.hpp"
#include "slender/word.hpp"

namespace slender::io {

class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

thompson::PLMap parse_pl_map(std::string_view json);
/// Canonical breakpoints written as "k/2^e" strings.
std::string format_pl_map(const thompson::PLMap& f);

earring::TruncatedEarringWord parse_earring_word(std::string_view json);
std::string format_earring_word(const earring::TruncatedEarringWord& u);

struct DiagSpec {
  std::uint64_t depth = 0;
  std::vector<word::Word> words;  // W_1, W_2, ...
  std::vector<BigInt> exponents;  // m_1, m_2, ...
};

DiagSpec parse_diag_spec(std::string_view json);

}  // namespace slender::io
