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

#include "slender/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace slender::io {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

std::string as_text(const json& value, const char* what) {
  if (value.is_string()) {
    return value.get<std::string>();
  }
  if (value.is_number_integer()) {
    return value.dump();
  }
  throw FormatError(std::string(what) + " must be a string or an integer");
}

std::uint64_t as_depth(const json& doc) {
  if (!doc.is_object() || !doc.contains("depth") || !doc["depth"].is_number_unsigned() ||
      doc["depth"].get<std::uint64_t>() == 0) {
    throw FormatError("expected a positive integer field \"depth\"");
  }
  return doc["depth"].get<std::uint64_t>();
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FormatError("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw FormatError("cannot write " + path);
  }
  out << text;
}

thompson::PLMap parse_pl_map(std::string_view text) {
  json doc = parse_json(text);
  if (!doc.is_array()) {
    throw FormatError("a Thompson element is a JSON array of [x, y] pairs");
  }
  std::vector<thompson::Breakpoint> points;
  for (const auto& pair : doc) {
    if (!pair.is_array() || pair.size() != 2) {
      throw FormatError("each breakpoint is a two-element array");
    }
    points.push_back({thompson::Dyadic::parse(as_text(pair[0], "a coordinate")),
                      thompson::Dyadic::parse(as_text(pair[1], "a coordinate"))});
  }
  return thompson::pl_validate(points);
}

std::string format_pl_map(const thompson::PLMap& f) {
  json doc = json::array();
  for (const auto& p : f.breakpoints()) {
    doc.push_back({p.x.to_string(), p.y.to_string()});
  }
  return doc.dump() + "\n";
}

earring::TruncatedEarringWord parse_earring_word(std::string_view text) {
  json doc = parse_json(text);
  std::uint64_t depth = as_depth(doc);
  const auto& alphabet = earring::earring_alphabet();
  if (doc.contains("word")) {
    return earring::from_word(word::parse_word(as_text(doc["word"], "\"word\""), alphabet),
                              depth);
  }
  if (!doc.contains("levels") || !doc["levels"].is_array() || doc["levels"].size() != depth) {
    throw FormatError("expected \"levels\" with one word per level");
  }
  std::vector<word::Word> levels;
  for (const auto& level : doc["levels"]) {
    levels.push_back(word::free_reduce(word::parse_word(as_text(level, "a level"), alphabet)));
  }
  return earring::TruncatedEarringWord(std::move(levels));
}

std::string format_earring_word(const earring::TruncatedEarringWord& u) {
  json doc;
  doc["depth"] = u.depth();
  doc["levels"] = json::array();
  for (const auto& w : u.levels()) {
    doc["levels"].push_back(word::to_string(w));
  }
  return doc.dump(2) + "\n";
}

DiagSpec parse_diag_spec(std::string_view text) {
  json doc = parse_json(text);
  DiagSpec spec;
  spec.depth = as_depth(doc);
  if (!doc.contains("terms") || !doc["terms"].is_array()) {
    throw FormatError("expected an array field \"terms\"");
  }
  for (const auto& term : doc["terms"]) {
    if (!term.is_object() || !term.contains("word") || !term.contains("m")) {
      throw FormatError("each term needs \"word\" and \"m\"");
    }
    spec.words.push_back(word::free_reduce(
        word::parse_word(as_text(term["word"], "\"word\""), earring::earring_alphabet())));
    spec.exponents.push_back(parse_bigint(as_text(term["m"], "\"m\"")));
  }
  return spec;
}

}  // namespace slender::io
