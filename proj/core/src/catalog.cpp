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

#include "slender/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace slender::catalog {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

// Splits at `sep` characters that sit outside every (), [] and {} pair.
std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[' || c == '{') {
      ++depth;
    } else if (c == ')' || c == ']' || c == '}') {
      --depth;
    } else if (c == sep && depth == 0) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  parts.push_back(trim(s.substr(start)));
  return parts;
}

std::string_view strip_delimiters(std::string_view s, char open, char close,
                                  const char* what) {
  s = trim(s);
  if (s.size() < 2 || s.front() != open || s.back() != close) {
    throw CatalogError(std::string("malformed ") + what + ": '" + std::string(s) + "'");
  }
  return trim(s.substr(1, s.size() - 2));
}

std::size_t parse_index(std::string_view s) {
  s = trim(s);
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      })) {
    throw CatalogError("malformed factor index '" + std::string(s) + "'");
  }
  return static_cast<std::size_t>(to_uint64(parse_bigint(s)));
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_bigint(text));
  }
  BigInt p = parse_bigint(trim(text.substr(0, slash)));
  BigInt q = parse_bigint(trim(text.substr(slash + 1)));
  if (q == 0) {
    throw CatalogError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(p, q);
}

void require_positive(const BigInt& k) {
  if (k < 1) {
    throw CatalogError("root order must be positive");
  }
}

BigInt smallest_prime_factor(const BigInt& k) {
  for (BigInt d = 2; d * d <= k; ++d) {
    if (k % d == 0) {
      return d;
    }
  }
  return k;
}

bool is_prime(const BigInt& k) { return k >= 2 && smallest_prime_factor(k) == k; }

// Vectors of `rank` integers with l1 norm exactly `norm`, lexicographic.
void l1_shell(std::size_t rank, const BigInt& norm, std::vector<BigInt>& prefix,
              std::vector<FreeAbelianElement>& out) {
  if (prefix.size() + 1 == rank) {
    if (norm == 0) {
      prefix.push_back(0);
      out.push_back({prefix});
      prefix.pop_back();
    } else {
      for (BigInt v : {BigInt(-norm), norm}) {
        prefix.push_back(v);
        out.push_back({prefix});
        prefix.pop_back();
      }
    }
    return;
  }
  for (BigInt v = -norm; v <= norm; ++v) {
    prefix.push_back(v);
    l1_shell(rank, norm - abs(v), prefix, out);
    prefix.pop_back();
  }
}

std::vector<FreeAbelianElement> l1_shell(std::size_t rank, const BigInt& norm) {
  std::vector<FreeAbelianElement> out;
  if (rank == 0) {
    if (norm == 0) {
      out.push_back({});
    }
    return out;
  }
  std::vector<BigInt> prefix;
  l1_shell(rank, norm, prefix, out);
  return out;
}

// Reduced words of length exactly `remaining` more letters after `prefix`.
void word_sphere(const FreeGroup& g, std::uint64_t remaining, std::vector<word::Letter>& prefix,
                 std::vector<word::Word>& out) {
  if (remaining == 0) {
    out.emplace_back(g.alphabet(), prefix);
    return;
  }
  for (std::size_t i = 0; i < g.rank(); ++i) {
    std::string base(1, static_cast<char>('a' + i));
    if (!prefix.empty() && prefix.back().base == base) {
      continue;
    }
    for (std::uint64_t e = 1; e <= remaining; ++e) {
      for (int sign : {1, -1}) {
        prefix.push_back({base, BigInt(sign) * e});
        word_sphere(g, remaining - e, prefix, out);
        prefix.pop_back();
      }
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------

std::strong_ordering operator<=>(const AnyElement& a, const AnyElement& b) {
  if (!a.self_ || !b.self_) {
    return a.self_ ? std::strong_ordering::greater
                   : (b.self_ ? std::strong_ordering::less : std::strong_ordering::equal);
  }
  std::type_index ta = a.self_->type();
  std::type_index tb = b.self_->type();
  if (ta != tb) {
    return ta < tb ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.self_->compare_same_type(*b.self_);
}

// ---------------------------------------------------------------------------

BigInt IntegerGroup::parse(std::string_view text) const { return parse_bigint(trim(text)); }

RootSet<BigInt> IntegerGroup::roots(const BigInt& x, const BigInt& k) const {
  require_positive(k);
  RootSet<BigInt> out;
  if (x % k == 0) {
    out.roots.push_back(x / k);
  }
  return out;
}

std::vector<BigInt> IntegerGroup::ball(std::uint64_t n) const {
  std::vector<BigInt> out;
  for (BigInt v = -BigInt(n); v <= BigInt(n); ++v) {
    out.push_back(v);
  }
  return out;
}

std::vector<BigInt> IntegerGroup::enumerate(std::size_t count) const {
  std::vector<BigInt> out;
  out.reserve(count);
  for (std::size_t i = 0; out.size() < count; ++i) {
    BigInt magnitude = (i + 1) / 2;
    out.push_back(i % 2 == 1 ? magnitude : BigInt(-magnitude));
  }
  return out;
}

// ---------------------------------------------------------------------------

FreeAbelianGroup::FreeAbelianGroup(std::size_t rank) : rank_(rank) {}

FreeAbelianElement FreeAbelianGroup::make(std::vector<BigInt> coordinates) const {
  if (coordinates.size() != rank_) {
    throw FactorMismatch("expected " + std::to_string(rank_) + " coordinates, got " +
                         std::to_string(coordinates.size()));
  }
  return {std::move(coordinates)};
}

FreeAbelianElement FreeAbelianGroup::identity() const {
  return {std::vector<BigInt>(rank_, BigInt(0))};
}

FreeAbelianElement FreeAbelianGroup::multiply(const FreeAbelianElement& x,
                                              const FreeAbelianElement& y) const {
  if (x.coordinates.size() != rank_ || y.coordinates.size() != rank_) {
    throw FactorMismatch("element of the wrong rank for " + name());
  }
  FreeAbelianElement out = x;
  for (std::size_t i = 0; i < rank_; ++i) {
    out.coordinates[i] += y.coordinates[i];
  }
  return out;
}

FreeAbelianElement FreeAbelianGroup::inverse(const FreeAbelianElement& x) const {
  FreeAbelianElement out = x;
  for (auto& c : out.coordinates) {
    c = -c;
  }
  return out;
}

std::string FreeAbelianGroup::format(const FreeAbelianElement& x) const {
  std::string out = "(";
  for (std::size_t i = 0; i < x.coordinates.size(); ++i) {
    if (i != 0) {
      out += ", ";
    }
    out += x.coordinates[i].str();
  }
  return out + ")";
}

FreeAbelianElement FreeAbelianGroup::parse(std::string_view text) const {
  auto body = strip_delimiters(text, '(', ')', "vector");
  std::vector<BigInt> coords;
  if (!body.empty()) {
    for (auto part : split_top_level(body, ',')) {
      coords.push_back(parse_bigint(part));
    }
  }
  return make(std::move(coords));
}

RootSet<FreeAbelianElement> FreeAbelianGroup::roots(const FreeAbelianElement& x,
                                                    const BigInt& k) const {
  require_positive(k);
  RootSet<FreeAbelianElement> out;
  FreeAbelianElement root = x;
  for (auto& c : root.coordinates) {
    if (c % k != 0) {
      return out;
    }
    c /= k;
  }
  out.roots.push_back(std::move(root));
  return out;
}

BigInt FreeAbelianGroup::length(const FreeAbelianElement& x) const {
  BigInt total = 0;
  for (const auto& c : x.coordinates) {
    total += abs(c);
  }
  return total;
}

std::vector<FreeAbelianElement> FreeAbelianGroup::ball(std::uint64_t n) const {
  std::vector<FreeAbelianElement> out;
  for (std::uint64_t r = 0; r <= n; ++r) {
    auto shell = l1_shell(rank_, BigInt(r));
    out.insert(out.end(), shell.begin(), shell.end());
    if (rank_ == 0) {
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FreeAbelianElement> FreeAbelianGroup::enumerate(std::size_t count) const {
  std::vector<FreeAbelianElement> out;
  for (std::uint64_t r = 0; out.size() < count; ++r) {
    auto shell = l1_shell(rank_, BigInt(r));
    for (auto& x : shell) {
      if (out.size() == count) {
        break;
      }
      out.push_back(std::move(x));
    }
    if (rank_ == 0) {
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

ZInvMGroup::ZInvMGroup(std::uint64_t m) : m_(m) {
  if (m == 0) {
    throw CatalogError("zinv(m) needs m >= 1");
  }
}

bool ZInvMGroup::admits(const Rational& value) const {
  BigInt d = denominator(value);
  const BigInt m = m_;
  while (d != 1) {
    BigInt g = gcd(d, m);
    if (g == 1) {
      return false;
    }
    d /= g;
  }
  return true;
}

ZInvMElement ZInvMGroup::make(const Rational& value) const {
  if (!admits(value)) {
    throw CatalogError(to_string(value) + " is not in " + name());
  }
  return {value};
}

ZInvMElement ZInvMGroup::multiply(const ZInvMElement& x, const ZInvMElement& y) const {
  return {x.value + y.value};
}

ZInvMElement ZInvMGroup::inverse(const ZInvMElement& x) const { return {-x.value}; }

ZInvMElement ZInvMGroup::parse(std::string_view text) const { return make(parse_rational(text)); }

RootSet<ZInvMElement> ZInvMGroup::roots(const ZInvMElement& x, const BigInt& k) const {
  require_positive(k);
  RootSet<ZInvMElement> out;
  Rational root = x.value / Rational(k);
  if (admits(root)) {
    out.roots.push_back({root});
  }
  return out;
}

std::vector<ZInvMElement> ZInvMGroup::enumerate(std::size_t count) const {
  const BigInt m = m_;
  // Smallest e with value * m^e integral.
  auto min_exponent = [&](const Rational& v) {
    std::uint64_t e = 0;
    if (m_ == 1) {
      return e;
    }
    BigInt d = denominator(v);
    BigInt scale = 1;
    while (scale % d != 0) {
      scale *= m;
      ++e;
    }
    return e;
  };
  auto level = [&](const Rational& v) {
    BigInt ceil_abs = BigInt(abs(numerator(v))) / denominator(v);
    if (ceil_abs * denominator(v) != BigInt(abs(numerator(v)))) {
      ++ceil_abs;
    }
    return std::max(BigInt(min_exponent(v)), ceil_abs);
  };

  std::vector<ZInvMElement> out;
  for (std::uint64_t L = 0; out.size() < count; ++L) {
    std::vector<Rational> fresh;
    std::uint64_t e_max = m_ == 1 ? 0 : L;
    BigInt scale = 1;
    for (std::uint64_t e = 0; e <= e_max; ++e, scale *= m) {
      BigInt p_max = BigInt(L) * scale;
      for (BigInt p = -p_max; p <= p_max; ++p) {
        Rational v(p, scale);
        if (min_exponent(v) == e && level(v) == BigInt(L)) {
          fresh.push_back(v);
        }
      }
    }
    std::sort(fresh.begin(), fresh.end(), [](const Rational& a, const Rational& b) {
      Rational aa = abs(a);
      Rational ab = abs(b);
      if (aa != ab) {
        return aa < ab;
      }
      return a > b;
    });
    for (auto& v : fresh) {
      if (out.size() == count) {
        break;
      }
      out.push_back({std::move(v)});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

FreeGroup::FreeGroup(std::size_t rank) : rank_(rank) {
  if (rank == 0 || rank > 26) {
    throw CatalogError("free(r) needs 1 <= r <= 26");
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rank; ++i) {
    names.emplace_back(1, static_cast<char>('a' + i));
  }
  alphabet_ = word::make_alphabet(std::move(names));
}

word::Word FreeGroup::generator(std::size_t i) const {
  if (i >= rank_) {
    throw CatalogError("generator index out of range for " + name());
  }
  return word::Word(alphabet_, {{std::string(1, static_cast<char>('a' + i)), 1}});
}

word::Word FreeGroup::parse(std::string_view text) const {
  return word::free_reduce(word::parse_word(text, alphabet_));
}

RootSet<word::Word> FreeGroup::roots(const word::Word& x, const BigInt& k) const {
  require_positive(k);
  RootSet<word::Word> out;
  if (auto root = word::fg_root(x, k)) {
    out.roots.push_back(std::move(*root));
  }
  return out;
}

std::vector<word::Word> FreeGroup::ball(std::uint64_t n) const {
  std::vector<word::Word> out;
  std::vector<word::Letter> prefix;
  for (std::uint64_t r = 0; r <= n; ++r) {
    word_sphere(*this, r, prefix, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<word::Word> FreeGroup::enumerate(std::size_t count) const {
  std::vector<word::Word> out;
  std::vector<word::Letter> prefix;
  for (std::uint64_t r = 0; out.size() < count; ++r) {
    std::vector<word::Word> sphere;
    word_sphere(*this, r, prefix, sphere);
    std::sort(sphere.begin(), sphere.end());
    for (auto& w : sphere) {
      if (out.size() == count) {
        break;
      }
      out.push_back(std::move(w));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

BsGroup::BsGroup(bs::Presentation presentation, bs::RootBound search_bound)
    : presentation_(presentation), bound_(std::move(search_bound)) {}

bs::BsWord BsGroup::parse(std::string_view text) const {
  return bs::bs_normal_form(bs::parse_bs_word(text, presentation_));
}

std::string BsGroup::name() const {
  return "bs(" + std::to_string(presentation_.m()) + "," + std::to_string(presentation_.n()) +
         ")";
}

RootSet<bs::BsWord> BsGroup::roots(const bs::BsWord& x, const BigInt& k) const {
  require_positive(k);
  if (x.presentation() != presentation_) {
    throw bs::PresentationMismatch("element of " + x.presentation().describe() + " given to " +
                                   presentation_.describe());
  }
  RootSet<bs::BsWord> out;
  if (k == 1) {
    out.roots.push_back(bs::bs_normal_form(x));
    return out;
  }
  // h^(p k') = x iff h^p is a k'-th root of x.
  if (auto p = smallest_prime_factor(k); p < k) {
    auto outer = roots(x, k / p);
    out.complete = outer.complete;
    for (const auto& z : outer.roots) {
      auto inner = roots(z, p);
      out.complete = out.complete && inner.complete;
      out.roots.insert(out.roots.end(), inner.roots.begin(), inner.roots.end());
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
    return out;
  }
  auto cyc = bs::bs_cyclic_reduce(x);
  const std::size_t c = cyc.core.t_count();
  // A cyclically reduced h with c(h) >= 1 has c(h^k) = k c(h), and
  // c(h^k) = 0 when c(h) = 0, so k must divide c.
  if (c >= 1 && BigInt(c) % k != 0) {
    return out;
  }
  const BigInt abs_m = presentation_.m() < 0 ? -presentation_.m() : presentation_.m();
  const BigInt abs_n = presentation_.n() < 0 ? -presentation_.n() : presentation_.n();
  if (c == 0 && is_prime(k) && k > abs_m && k > abs_n) {
    // x = u a^l u^-1; every k-th root is conjugate into <a> by the same u.
    const BigInt& l = cyc.core.head();
    if (l % k == 0) {
      auto root = bs::BsWord::a_power(presentation_, l / k);
      out.roots.push_back(bs::bs_multiply(
          bs::bs_multiply(cyc.conjugator, root), bs::bs_inverse(cyc.conjugator)));
    }
    return out;
  }
  out.roots = bs::bs_find_roots(x, to_uint64(k), bound_);
  out.complete = false;
  return out;
}

std::vector<bs::BsWord> BsGroup::enumerate(std::size_t count) const {
  std::vector<bs::BsWord> out;
  std::set<bs::BsWord> seen;
  for (std::size_t L = 0; out.size() < count; ++L) {
    for (auto& w : bs::bs_enumerate_normal_forms(presentation_, {L, BigInt(L)})) {
      if (out.size() == count) {
        break;
      }
      if (seen.insert(w).second) {
        out.push_back(std::move(w));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

thompson::PLMap ThompsonGroup::parse(std::string_view text) const {
  std::vector<std::pair<Rational, Rational>> points;
  std::string_view rest = trim(text);
  while (!rest.empty()) {
    auto close = rest.find(')');
    if (rest.front() != '(' || close == std::string_view::npos) {
      throw thompson::ThompsonError(thompson::ThompsonError::Reason::malformed,
                                    "expected '(x, y)' pairs, got '" + std::string(text) + "'");
    }
    auto coords = split_top_level(rest.substr(1, close - 1), ',');
    if (coords.size() != 2) {
      throw thompson::ThompsonError(thompson::ThompsonError::Reason::malformed,
                                    "a breakpoint has two coordinates");
    }
    points.emplace_back(thompson::Dyadic::parse(coords[0]).to_rational(),
                        thompson::Dyadic::parse(coords[1]).to_rational());
    rest = trim(rest.substr(close + 1));
  }
  return thompson::pl_validate(points);
}

// ---------------------------------------------------------------------------

DirectSumGroup::DirectSumGroup(std::vector<AnyGroup> factors)
    : family_(std::make_shared<const Family>(Family{std::move(factors), nullptr, ""})) {}

DirectSumGroup::DirectSumGroup(std::function<AnyGroup(std::size_t)> family, std::string name)
    : family_(std::make_shared<const Family>(Family{{}, std::move(family), std::move(name)})) {}

AnyGroup DirectSumGroup::factor(std::size_t index) const {
  if (family_->rule) {
    return family_->rule(index);
  }
  if (index >= family_->finite.size()) {
    throw FactorMismatch("factor index " + std::to_string(index) + " out of range for " +
                         name());
  }
  return family_->finite[index];
}

std::optional<std::size_t> DirectSumGroup::factor_count() const {
  if (family_->rule) {
    return std::nullopt;
  }
  return family_->finite.size();
}

DirectSumElement DirectSumGroup::inject(std::size_t index, const AnyElement& x) const {
  AnyGroup f = factor(index);
  // Round-trip through multiply to check membership.
  AnyElement value = f.multiply(f.identity(), x);
  DirectSumElement out;
  if (value != f.identity()) {
    out.components.emplace(index, std::move(value));
  }
  return out;
}

AnyElement DirectSumGroup::project(const DirectSumElement& x, std::size_t index) const {
  auto it = x.components.find(index);
  if (it != x.components.end()) {
    return it->second;
  }
  return factor(index).identity();
}

DirectSumElement DirectSumGroup::multiply(const DirectSumElement& x,
                                          const DirectSumElement& y) const {
  DirectSumElement out = x;
  for (const auto& [index, value] : y.components) {
    AnyGroup f = factor(index);
    auto it = out.components.find(index);
    if (it == out.components.end()) {
      out.components.emplace(index, f.multiply(f.identity(), value));
      continue;
    }
    AnyElement product = f.multiply(it->second, value);
    if (product == f.identity()) {
      out.components.erase(it);
    } else {
      it->second = std::move(product);
    }
  }
  return out;
}

DirectSumElement DirectSumGroup::inverse(const DirectSumElement& x) const {
  DirectSumElement out;
  for (const auto& [index, value] : x.components) {
    out.components.emplace(index, factor(index).inverse(value));
  }
  return out;
}

std::string DirectSumGroup::format(const DirectSumElement& x) const {
  std::string out = "{";
  bool first = true;
  for (const auto& [index, value] : x.components) {
    if (!first) {
      out += "; ";
    }
    first = false;
    out += std::to_string(index) + ": " + factor(index).format(value);
  }
  return out + "}";
}

DirectSumElement DirectSumGroup::parse(std::string_view text) const {
  auto body = strip_delimiters(text, '{', '}', "direct sum element");
  DirectSumElement out;
  if (body.empty()) {
    return out;
  }
  for (auto part : split_top_level(body, ';')) {
    auto colon = part.find(':');
    if (colon == std::string_view::npos) {
      throw CatalogError("expected 'index: element', got '" + std::string(part) + "'");
    }
    std::size_t index = parse_index(part.substr(0, colon));
    AnyGroup f = factor(index);
    out = multiply(out, inject(index, f.parse(trim(part.substr(colon + 1)))));
  }
  return out;
}

std::string DirectSumGroup::name() const {
  if (family_->rule) {
    return family_->name;
  }
  std::string out = "direct-sum{";
  for (std::size_t i = 0; i < family_->finite.size(); ++i) {
    if (i != 0) {
      out += ", ";
    }
    out += family_->finite[i].name();
  }
  return out + "}";
}

DirectSumElement dsum_multiply(const DirectSumGroup& g, const DirectSumElement& u,
                               const DirectSumElement& v) {
  return g.multiply(u, v);
}

std::vector<std::size_t> supp(const DirectSumElement& g) {
  std::vector<std::size_t> out;
  out.reserve(g.components.size());
  for (const auto& entry : g.components) {
    out.push_back(entry.first);
  }
  return out;
}

DirectSumGroup zinv_family_sum() {
  return DirectSumGroup(
      [](std::size_t m) {
        if (m == 0) {
          throw FactorMismatch("the Z[1/m] family is indexed by m >= 1");
        }
        return AnyGroup(ZInvMGroup(m));
      },
      "direct-sum of zinv(m) over m >= 1");
}

// ---------------------------------------------------------------------------

FreeProductGroup::FreeProductGroup(std::vector<AnyGroup> factors)
    : factors_(std::make_shared<const std::vector<AnyGroup>>(std::move(factors))) {}

const AnyGroup& FreeProductGroup::factor(std::size_t index) const {
  if (index >= factors_->size()) {
    throw FactorMismatch("factor index " + std::to_string(index) + " out of range for " +
                         name());
  }
  return (*factors_)[index];
}

FreeProductElement fprod_normal_form(const FreeProductGroup& g,
                                     std::vector<FreeProductSyllable> raw) {
  FreeProductElement out;
  for (auto& s : raw) {
    const AnyGroup& f = g.factor(s.factor);
    AnyElement value = f.multiply(f.identity(), s.value);
    if (value == f.identity()) {
      continue;
    }
    if (!out.syllables.empty() && out.syllables.back().factor == s.factor) {
      AnyElement merged = f.multiply(out.syllables.back().value, value);
      if (merged == f.identity()) {
        out.syllables.pop_back();
      } else {
        out.syllables.back().value = std::move(merged);
      }
      continue;
    }
    out.syllables.push_back({s.factor, std::move(value)});
  }
  return out;
}

FreeProductElement FreeProductGroup::multiply(const FreeProductElement& x,
                                              const FreeProductElement& y) const {
  std::vector<FreeProductSyllable> raw = x.syllables;
  raw.insert(raw.end(), y.syllables.begin(), y.syllables.end());
  return fprod_normal_form(*this, std::move(raw));
}

FreeProductElement FreeProductGroup::inverse(const FreeProductElement& x) const {
  FreeProductElement out;
  for (auto it = x.syllables.rbegin(); it != x.syllables.rend(); ++it) {
    out.syllables.push_back({it->factor, factor(it->factor).inverse(it->value)});
  }
  return out;
}

std::string FreeProductGroup::format(const FreeProductElement& x) const {
  if (x.syllables.empty()) {
    return "[]";
  }
  std::string out;
  for (const auto& s : x.syllables) {
    out += "[" + std::to_string(s.factor) + ": " + factor(s.factor).format(s.value) + "]";
  }
  return out;
}

FreeProductElement FreeProductGroup::parse(std::string_view text) const {
  std::string_view rest = trim(text);
  std::vector<FreeProductSyllable> raw;
  if (rest == "[]") {
    return {};
  }
  while (!rest.empty()) {
    if (rest.front() != '[') {
      throw CatalogError("expected '[index: element]', got '" + std::string(rest) + "'");
    }
    int depth = 0;
    std::size_t close = std::string_view::npos;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      char c = rest[i];
      if (c == '(' || c == '[' || c == '{') {
        ++depth;
      } else if (c == ')' || c == ']' || c == '}') {
        if (--depth == 0) {
          close = i;
          break;
        }
      }
    }
    if (close == std::string_view::npos) {
      throw CatalogError("unbalanced brackets in '" + std::string(text) + "'");
    }
    auto body = rest.substr(1, close - 1);
    auto colon = body.find(':');
    if (colon == std::string_view::npos) {
      throw CatalogError("expected 'index: element', got '" + std::string(body) + "'");
    }
    std::size_t index = parse_index(body.substr(0, colon));
    raw.push_back({index, factor(index).parse(trim(body.substr(colon + 1)))});
    rest = trim(rest.substr(close + 1));
  }
  return fprod_normal_form(*this, std::move(raw));
}

std::string FreeProductGroup::name() const {
  std::string out = "free-product{";
  for (std::size_t i = 0; i < factors_->size(); ++i) {
    if (i != 0) {
      out += ", ";
    }
    out += (*factors_)[i].name();
  }
  return out + "}";
}

}  // namespace slender::catalog
