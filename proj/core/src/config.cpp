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

#include "slender/config.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace slender::config {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const GroupOptions& options) : text_(text), options_(options) {}

  catalog::AnyGroup parse_all() {
    auto g = parse_group();
    skip_space();
    if (pos_ != text_.size()) {
      fail("trailing input");
    }
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ConfigError("group spec '" + std::string(text_) + "': " + why + " at offset " +
                      std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(std::string("expected '") + c + "'");
    }
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-' ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) {
      fail("expected a group name");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      ++pos_;
    }
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    try {
      return to_int64(parse_bigint(text_.substr(start, pos_ - start)));
    } catch (const std::exception&) {
      fail("expected an integer");
    }
  }

  std::uint64_t positive() {
    std::int64_t v = integer();
    if (v < 1) {
      fail("expected a positive integer");
    }
    return static_cast<std::uint64_t>(v);
  }

  std::vector<catalog::AnyGroup> factor_list() {
    skip_space();
    if (text_.substr(pos_).starts_with("of") &&
        (pos_ + 2 == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 2])))) {
      pos_ += 2;
    }
    expect('{');
    std::vector<catalog::AnyGroup> factors;
    if (accept('}')) {
      fail("a sum or product needs at least one factor");
    }
    do {
      factors.push_back(parse_group());
    } while (accept(','));
    expect('}');
    return factors;
  }

  catalog::AnyGroup parse_group() {
    std::string name = identifier();
    if (name == "z") {
      if (accept('(')) {
        std::uint64_t d = positive();
        expect(')');
        if (d == 1) {
          return catalog::AnyGroup(catalog::IntegerGroup{});
        }
        return catalog::AnyGroup(catalog::FreeAbelianGroup(d));
      }
      return catalog::AnyGroup(catalog::IntegerGroup{});
    }
    if (name == "zinv") {
      expect('(');
      std::uint64_t m = positive();
      expect(')');
      return catalog::AnyGroup(catalog::ZInvMGroup(m));
    }
    if (name == "free") {
      expect('(');
      std::uint64_t r = positive();
      expect(')');
      if (r > 26) {
        fail("free groups have rank at most 26");
      }
      return catalog::AnyGroup(catalog::FreeGroup(r));
    }
    if (name == "bs") {
      expect('(');
      std::int64_t m = integer();
      expect(',');
      std::int64_t n = integer();
      expect(')');
      if (m == 0 || n == 0) {
        fail("bs(m,n) needs nonzero m and n");
      }
      return catalog::AnyGroup(catalog::BsGroup(bs::Presentation(m, n), options_.bs_bound));
    }
    if (name == "thompson") {
      return catalog::AnyGroup(catalog::ThompsonGroup{});
    }
    if (name == "direct-sum") {
      return catalog::AnyGroup(catalog::DirectSumGroup(factor_list()));
    }
    if (name == "free-product") {
      return catalog::AnyGroup(catalog::FreeProductGroup(factor_list()));
    }
    fail("unknown group '" + name + "'");
  }

  std::string_view text_;
  const GroupOptions& options_;
  std::size_t pos_ = 0;
};

}  // namespace

catalog::AnyGroup make_group(std::string_view spec, const GroupOptions& options) {
  return Parser(spec, options).parse_all();
}

}  // namespace slender::config
