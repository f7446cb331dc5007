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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "slender/bs.hpp"
#include "slender/catalog.hpp"
#include "slender/config.hpp"
#include "slender/earring.hpp"
#include "slender/io.hpp"
#include "slender/lsp.hpp"
#include "slender/thompson.hpp"

namespace slender::cli {

namespace {

using catalog::AnyElement;
using catalog::AnyGroup;

// Domain failures that are not exceptions (a FAIL line, a failed check).
struct Outcome {
  int code = 0;
};

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

// Splits at ';' outside brackets.
std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (char c : text) {
    if (c == '(' || c == '[' || c == '{') {
      ++depth;
    } else if (c == ')' || c == ']' || c == '}') {
      --depth;
    }
    if (c == ';' && depth == 0) {
      parts.push_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!trim(current).empty()) {
    parts.push_back(trim(current));
  }
  return parts;
}

// A Thompson element given inline as JSON or as a file name.
thompson::PLMap load_pl_map(const std::string& arg) {
  std::string text = trim(arg);
  if (!text.empty() && text.front() == '[') {
    return io::parse_pl_map(text);
  }
  return io::parse_pl_map(io::read_file(arg));
}

earring::TruncatedEarringWord load_earring(const std::string& arg) {
  std::string text = trim(arg);
  if (!text.empty() && text.front() == '{') {
    return io::parse_earring_word(text);
  }
  return io::parse_earring_word(io::read_file(arg));
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    io::write_file(path, text);
  }
}

// ---------------------------------------------------------------------------

struct BsArgs {
  std::string action;
  std::int64_t m = 1;
  std::int64_t n = 1;
  std::vector<std::string> words;
  std::string q = "2";
  std::uint64_t p = 2;
  std::size_t max_t = 1;
  std::string max_exp = "3";
};

void add_bs(CLI::App& app, std::function<int()>& action, std::ostream& out) {
  auto args = std::make_shared<BsArgs>();
  auto* cmd = app.add_subcommand("bs", "Baumslag-Solitar groups BS(m,n) = <a,t | t^-1 a^m t = a^n>");
  cmd->add_option("action", args->action, "normalize | reduce | wp | length | cyclic-length | power | roots")
      ->required()
      ->check(CLI::IsMember({"normalize", "reduce", "wp", "length", "cyclic-length", "power", "roots"}));
  cmd->add_option("-m", args->m, "relator exponent m")->required();
  cmd->add_option("-n", args->n, "relator exponent n")->required();
  cmd->add_option("words", args->words, "words in a, t")->required();
  cmd->add_option("-q", args->q, "exponent for power");
  cmd->add_option("-p", args->p, "root order")->check(CLI::PositiveNumber);
  cmd->add_option("--max-t", args->max_t, "root search: most t-letters");
  cmd->add_option("--max-exp", args->max_exp, "root search: largest |exponent|");
  cmd->callback([args, &action, &out] {
    action = [args, &out] {
      if (args->m == 0 || args->n == 0) {
        throw bs::BsError("m and n must be nonzero");
      }
      bs::Presentation pres(args->m, args->n);
      std::vector<bs::BsWord> ws;
      for (const auto& w : args->words) {
        ws.push_back(bs::parse_bs_word(w, pres));
      }
      const std::string& a = args->action;
      if (a == "wp") {
        if (ws.size() == 1) {
          out << (bs::bs_is_identity(ws[0]) ? "trivial" : "nontrivial") << "\n";
        } else if (ws.size() == 2) {
          out << (bs::bs_equal(ws[0], ws[1]) ? "equal" : "different") << "\n";
        } else {
          throw std::invalid_argument("wp takes one or two words");
        }
        return 0;
      }
      for (const auto& w : ws) {
        if (a == "normalize") {
          out << bs::to_string(bs::bs_normal_form(w)) << "\n";
        } else if (a == "reduce") {
          out << bs::to_string(bs::bs_reduce(w)) << "\n";
        } else if (a == "length") {
          out << bs::bs_length(w) << "\n";
        } else if (a == "cyclic-length") {
          out << bs::bs_cyclic_length(w) << "\n";
        } else if (a == "power") {
          out << bs::to_string(bs::bs_power(w, parse_bigint(args->q))) << "\n";
        } else if (a == "roots") {
          bs::RootBound bound{args->max_t, parse_bigint(args->max_exp)};
          for (const auto& r : bs::bs_find_roots(w, args->p, bound)) {
            out << bs::to_string(r) << "\n";
          }
        }
      }
      return 0;
    };
  });
}

// ---------------------------------------------------------------------------

struct ThompsonArgs {
  std::string action;
  std::string first;
  std::string second;
  std::string q = "2";
  std::uint64_t depth = 3;
  std::string output;
};

void add_thompson(CLI::App& app, std::function<int()>& action, std::ostream& out) {
  auto args = std::make_shared<ThompsonArgs>();
  auto* cmd = app.add_subcommand(
      "thompson", "Thompson's group F; elements are JSON breakpoint files or inline JSON");
  cmd->add_option("action", args->action, "validate | compose | invert | power | roots")
      ->required()
      ->check(CLI::IsMember({"validate", "compose", "invert", "power", "roots"}));
  // Two scalar positionals: CLI11 splits a '[...]' value given to a vector option.
  cmd->add_option("element", args->first, "element file or inline JSON")->required();
  cmd->add_option("other", args->second, "second element, for compose");
  cmd->add_option("-q", args->q, "exponent (power) or root order (roots)");
  cmd->add_option("--depth", args->depth, "grid depth for root search")
      ->check(CLI::Range(std::uint64_t{0}, std::uint64_t{12}));
  cmd->add_option("-o,--output", args->output, "write the result here");
  cmd->callback([args, &action, &out] {
    action = [args, &out] {
      std::vector<thompson::PLMap> fs;
      fs.push_back(load_pl_map(args->first));
      if (!args->second.empty()) {
        fs.push_back(load_pl_map(args->second));
      }
      const std::string& a = args->action;
      auto need = [&](std::size_t count) {
        if (fs.size() != count) {
          throw std::invalid_argument(a + " takes " + std::to_string(count) + " element(s)");
        }
      };
      std::string text;
      if (a == "validate") {
        for (const auto& f : fs) {
          text += io::format_pl_map(f);
        }
      } else if (a == "compose") {
        // f o g, applying g first.
        need(2);
        text = io::format_pl_map(thompson::pl_compose(fs[0], fs[1]));
      } else if (a == "invert") {
        need(1);
        text = io::format_pl_map(thompson::pl_invert(fs[0]));
      } else if (a == "power") {
        need(1);
        text = io::format_pl_map(thompson::pl_power(fs[0], parse_bigint(args->q)));
      } else {
        need(1);
        BigInt q = parse_bigint(args->q);
        if (q < 1) {
          throw std::invalid_argument("root order must be positive");
        }
        for (const auto& r : thompson::pl_find_roots(fs[0], to_uint64(q), args->depth)) {
          text += io::format_pl_map(r);
        }
      }
      emit(text, args->output, out);
      return 0;
    };
  });
}

// ---------------------------------------------------------------------------

struct LspArgs {
  std::string action;
  std::string group;
  std::string construction = "dudley";
  std::uint64_t k = 2;
  std::uint64_t n_max = 10;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::string force_kn;
  bool force_sampling = false;
  std::string elements;
  std::uint64_t depth = 3;
  std::size_t max_list = 64;
  std::string output;
};

lsp::LimitingSequencePair<AnyGroup> build_lsp(const LspArgs& args) {
  AnyGroup g = config::make_group(args.group);
  lsp::LimitingSequencePair<AnyGroup> pair = [&] {
    if (args.construction == "dudley") {
      return lsp::lsp_from_dudley(g);
    }
    if (args.construction == "monotone") {
      return lsp::lsp_from_monotone(g, args.k);
    }
    return lsp::lsp_from_antecedents(g, BigInt(args.k));
  }();
  if (!args.force_kn.empty()) {
    pair = lsp::with_forced_exponent(std::move(pair), parse_bigint(args.force_kn));
  }
  return pair;
}

void add_lsp(CLI::App& app, std::function<int()>& action, std::ostream& out) {
  auto args = std::make_shared<LspArgs>();
  auto* cmd = app.add_subcommand("lsp", "Limiting sequence pairs");
  cmd->add_option("action", args->action, "make | check | diag")
      ->required()
      ->check(CLI::IsMember({"make", "check", "diag"}));
  cmd->add_option("--group", args->group, "group spec, e.g. z, z(2), zinv(2), free(2), bs(2,3)")
      ->required();
  cmd->add_option("--construction", args->construction, "dudley | monotone | antecedents")
      ->check(CLI::IsMember({"dudley", "monotone", "antecedents"}));
  cmd->add_option("-k", args->k, "monotone constant or antecedent base")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 32));
  cmd->add_option("--n-max", args->n_max, "largest n")->check(CLI::PositiveNumber);
  cmd->add_option("--samples", args->samples, "samples per sampled check");
  cmd->add_option("--seed", args->seed, "seed for sampled checks");
  cmd->add_option("--force-kn", args->force_kn, "replace every k_n by this value");
  cmd->add_flag("--force-sampling", args->force_sampling, "sample even when F_n is finite");
  cmd->add_option("--elements", args->elements, "diag: g_1; g_2; ... in the group's syntax");
  cmd->add_option("--depth", args->depth, "diag: depth N")->check(CLI::PositiveNumber);
  cmd->add_option("--max-list", args->max_list, "make: list F_n when it has at most this many elements");
  cmd->add_option("-o,--output", args->output, "write the report here");
  cmd->callback([args, &action, &out] {
    action = [args, &out] {
      auto pair = build_lsp(*args);
      const AnyGroup& g = pair.group;
      std::ostringstream text;
      if (args->action == "make") {
        text << "# " << pair.description << "\n";
        for (std::uint64_t n = 1; n <= args->n_max; ++n) {
          auto F = pair.F(n);
          text << "n=" << n << " k_n=" << to_string(pair.k(n));
          if (F.enumerable()) {
            const auto& xs = F.elements();
            text << " |F_n|=" << xs.size();
            if (xs.size() <= args->max_list) {
              text << " F_n={";
              for (std::size_t i = 0; i < xs.size(); ++i) {
                text << (i ? "; " : "") << g.format(xs[i]);
              }
              text << "}";
            }
          } else {
            text << " F_n=predicate";
          }
          text << "\n";
        }
        emit(text.str(), args->output, out);
        return 0;
      }
      if (args->action == "check") {
        lsp::CheckOptions<AnyElement> opts;
        opts.n_max = args->n_max;
        opts.samples = args->samples;
        opts.seed = args->seed;
        opts.force_sampling = args->force_sampling;
        auto report = lsp::lsp_check(pair, opts);
        emit(report.to_text(), args->output, out);
        return report.all_pass() ? 0 : 1;
      }
      std::vector<AnyElement> elements;
      for (const auto& e : split_list(args->elements)) {
        elements.push_back(g.parse(e));
      }
      auto d = lsp::diag_indices(pair, elements, args->depth);
      for (std::size_t n = 0; n < d.j.size(); ++n) {
        text << "n=" << n + 1 << " j=";
        for (std::size_t s = 0; s < d.j[n].size(); ++s) {
          text << (s ? "," : "") << d.j[n][s];
        }
        text << " m=" << to_string(d.m[n]) << "\n";
      }
      emit(text.str(), args->output, out);
      return 0;
    };
  });
}

// ---------------------------------------------------------------------------

struct EarringArgs {
  std::string action;
  std::string input;
  std::uint64_t low = 0;
  std::uint64_t high = 0;
  std::uint64_t level = 1;
  std::size_t budget = earring::kDefaultBudget;
  bool all = false;
  std::string group;
  std::string map;
  std::uint64_t bound = 0;
  std::string output;
};

void add_earring(CLI::App& app, std::function<int()>& action, std::ostream& out) {
  auto args = std::make_shared<EarringArgs>();
  auto* cmd = app.add_subcommand("earring", "Truncated Hawaiian earring words");
  cmd->add_option("action", args->action, "project | split | diag | eval")
      ->required()
      ->check(CLI::IsMember({"project", "split", "diag", "eval"}));
  cmd->add_option("input", args->input, "earring word or diagonal spec (file or inline JSON)")
      ->required();
  auto* low = cmd->add_option("--low", args->low, "project: keep indices <= N");
  cmd->add_option("--high", args->high, "project: delete indices <= N")->excludes(low);
  cmd->add_option("-N,--level", args->level, "split: cut between N and N+1");
  cmd->add_option("--budget", args->budget, "diag: syllable budget per level");
  cmd->add_flag("--all", args->all, "diag: print U_0, ..., U_D");
  cmd->add_option("--group", args->group, "eval: target group spec");
  cmd->add_option("--map", args->map, "eval: images '1=x; 3=y'");
  cmd->add_option("--bound", args->bound, "eval: support bound B");
  cmd->add_option("-o,--output", args->output, "write the result here");
  cmd->callback([args, &action, &out, low] {
    action = [args, &out, low] {
      std::ostringstream text;
      const std::string& a = args->action;
      if (a == "diag") {
        std::string source = trim(args->input);
        auto spec = io::parse_diag_spec(source.starts_with("{") ? source
                                                                : io::read_file(args->input));
        auto u = earring::ew_diag_word(spec.words, spec.exponents, spec.depth, args->budget);
        if (args->all) {
          for (const auto& ui : u) {
            text << io::format_earring_word(ui);
          }
        } else {
          text << io::format_earring_word(u.front());
        }
        emit(text.str(), args->output, out);
        return 0;
      }
      auto u = load_earring(args->input);
      if (a == "project") {
        auto image = low->count() > 0 ? earring::ew_project_low(u, args->low)
                                      : earring::ew_project_high(u, args->high);
        emit(io::format_earring_word(image), args->output, out);
        return 0;
      }
      if (a == "split") {
        for (const auto& block : earring::ew_split(u, args->level)) {
          text << (block.kind == earring::BlockKind::low ? "low: " : "high: ")
               << word::to_string(block.letters) << "\n";
        }
        emit(text.str(), args->output, out);
        return 0;
      }
      if (args->group.empty()) {
        throw std::invalid_argument("eval needs --group");
      }
      AnyGroup g = config::make_group(args->group);
      std::map<std::uint64_t, AnyElement> images;
      for (const auto& entry : split_list(args->map)) {
        auto eq = entry.find('=');
        if (eq == std::string::npos) {
          throw std::invalid_argument("map entries look like 'index=element'");
        }
        images.emplace(to_uint64(parse_bigint(trim(entry.substr(0, eq)))),
                       g.parse(trim(entry.substr(eq + 1))));
      }
      std::uint64_t bound = args->bound;
      for (const auto& entry : images) {
        bound = std::max(bound, entry.first);
      }
      earring::GeneratorMap<AnyGroup> phi(g, images, bound);
      text << g.format(earring::ew_eval_hom(phi, u)) << "\n";
      emit(text.str(), args->output, out);
      return 0;
    };
  });
}

// ---------------------------------------------------------------------------

struct CatalogArgs {
  std::string action;
  std::string group;
  std::string element;
  std::uint64_t k = 2;
};

void add_catalog(CLI::App& app, std::function<int()>& action, std::ostream& out,
                 std::ostream& err) {
  auto args = std::make_shared<CatalogArgs>();
  auto* cmd = app.add_subcommand("catalog", "Antecedent sets and supports");
  cmd->add_option("action", args->action, "antecedents | supp")
      ->required()
      ->check(CLI::IsMember({"antecedents", "supp"}));
  cmd->add_option("--group", args->group, "group spec")->required();
  cmd->add_option("element", args->element, "element in the group's syntax")->required();
  cmd->add_option("-k", args->k, "antecedent base")->check(CLI::PositiveNumber);
  cmd->callback([args, &action, &out, &err] {
    action = [args, &out, &err] {
      AnyGroup g = config::make_group(args->group);
      AnyElement x = g.parse(args->element);
      if (args->action == "antecedents") {
        try {
          auto ant = catalog::antecedents(g, x, BigInt(args->k));
          for (const auto& h : ant.elements) {
            out << g.format(h) << "\n";
          }
          if (!ant.complete) {
            err << "note: some roots came from a bounded search\n";
          }
        } catch (const catalog::AntecedentDivergence& e) {
          err << "error: " << e.what() << "\nwitness chain:\n";
          constexpr std::size_t shown = 12;
          const auto& chain = e.chain();
          for (std::size_t i = 0; i < chain.size() && i < shown; ++i) {
            err << "  " << chain[i] << "\n";
          }
          if (chain.size() > shown) {
            err << "  ... (" << chain.size() - shown << " more)\n";
          }
          return 1;
        }
        return 0;
      }
      const auto* sum = g.target<catalog::DirectSumGroup>();
      if (sum == nullptr) {
        throw std::invalid_argument("supp needs a direct-sum group");
      }
      auto indices = catalog::supp(x.get<catalog::DirectSumElement>());
      out << "{";
      for (std::size_t i = 0; i < indices.size(); ++i) {
        out << (i ? ", " : "") << indices[i];
      }
      out << "}\n";
      return 0;
    };
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"slender: words, normal forms and limiting sequence pairs", "slender"};
  app.require_subcommand(1);
  std::function<int()> action;
  add_bs(app, action, out);
  add_thompson(app, action, out);
  add_lsp(app, action, out);
  add_earring(app, action, out);
  add_catalog(app, action, out, err);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  try {
    return action ? action() : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace slender::cli
