#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "classify.hpp"
#include "core.hpp"
#include "normalize.hpp"
#include "quasiperiod.hpp"
#include "text.hpp"
#include "verify.hpp"

namespace episturmian::cli {

using json = nlohmann::json;

/// Result of one subcommand, rendered as text or JSON.
struct outcome {
  json result;
  std::optional<json> witnesses;
  std::optional<std::string> finiteness;
  std::vector<std::string> lines;  // text form
  int exit_code = 0;
};

struct settings {
  bool json_output = false;
  std::string order;
  std::size_t limit = 32;
  std::size_t length = 10000;
};

namespace detail {

inline std::string bool_text(bool b) { return b ? "true" : "false"; }

inline outcome boolean(bool b) {
  outcome o;
  o.result = b;
  o.lines = {bool_text(b)};
  return o;
}

inline outcome text(const std::string& s) {
  outcome o;
  o.result = s;
  o.lines = {s};
  return o;
}

inline outcome word_list(const std::vector<plain_word>& ws) {
  outcome o;
  o.result = json::array();
  for (const auto& w : ws) {
    o.result.push_back(w);
    o.lines.push_back(w);
  }
  return o;
}

inline std::vector<plain_word> by_length(const std::set<plain_word>& s) {
  std::vector<plain_word> v(s.begin(), s.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return v;
}

/// Alphabet a..z up to the largest letter used, at least `min_size` letters, unless an order is given.
inline ordered_alphabet alphabet_for(const settings& s, letter_mask used, int min_size) {
  if (!s.order.empty()) return ordered_alphabet(s.order);
  int size = min_size;
  for (int c = 0; c < max_alphabet_size; ++c)
    if (used & (letter_mask{1} << c)) size = std::max(size, c + 1);
  return ordered_alphabet::alphabetical(size);
}

inline outcome quasiperiod_outcome(const quasiperiod_report& r) {
  outcome o;
  o.result = json::array();
  o.witnesses = json::array();
  o.finiteness = r.finiteness == finiteness::Finite ? "Finite" : "Infinite";
  o.lines.push_back(*o.finiteness + (r.truncated ? " (truncated)" : ""));
  for (const auto& w : r.items) {
    o.result.push_back(w.quasiperiod);
    o.witnesses->push_back(
        {{"quasiperiod", w.quasiperiod}, {"w", render(w.w_spinned)}, {"v", w.v}, {"p", w.p}});
    o.lines.push_back(w.quasiperiod);
  }
  if (r.truncated) (*o.witnesses).push_back({{"truncated", true}});
  return o;
}

inline outcome strong_outcome(const strong_qp_verdict& v) {
  static const char* names[] = {"I", "II", "III"};
  outcome o;
  o.result = v.verdict;
  if (v.verdict) {
    std::string c = names[static_cast<int>(*v.condition)];
    o.witnesses = json{{"condition", c}};
    o.lines = {"true " + c};
  } else {
    o.witnesses = json{{"witness", render(*v.witness)}};
    o.lines = {"false " + render(*v.witness)};
  }
  return o;
}

}  // namespace detail

/// Runs the command line; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Episturmian words: generation, normalization, quasiperiods, Lyndon properties"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  settings s;
  app.add_flag("--json", s.json_output, "Emit a JSON document");
  app.add_option("--order", s.order, "Alphabet order, e.g. cab");
  app.add_option("--limit", s.limit, "Cap on enumerations")->capture_default_str();
  app.add_option("--length", s.length, "Prefix length")->capture_default_str();

  std::vector<std::string> args;
  std::function<outcome()> action;
  std::string command;

  auto arg = [&](std::size_t i) -> const std::string& { return args.at(i); };
  auto directive = [&](std::size_t i) { return parse_directive(arg(i)); };
  auto spinned = [&](std::size_t i) { return parse_spinned(arg(i)); };
  auto plain = [&](std::size_t i) { return parse_plain(arg(i)); };

  auto positional = [&](CLI::App* c, std::size_t count, const std::string& names) {
    c->add_option("args", args, names)->required()->expected(static_cast<int>(count));
    return c;
  };
  auto subcommand = [&](const std::string& name, const std::string& help, std::size_t count,
                        const std::string& names, std::function<outcome()> fn) {
    auto* c = app.add_subcommand(name, help);
    positional(c, count, names);
    c->callback([&command, &action, name, fn] {
      command = name;
      action = fn;
    });
    return c;
  };
  subcommand("pal", "Iterated palindromic closure Pal(WORD)", 1, "WORD", [&] {
    return detail::text(pal(plain(0)));
  });
  subcommand("closure", "Palindromic right closure of WORD", 1, "WORD", [&] {
    return detail::text(palindromic_closure(plain(0)));
  });
  subcommand("apply", "Image of WORD under the morphism of SPINNED", 2, "SPINNED WORD", [&] {
    return detail::text(apply_morphism(spinned(0), plain(1)));
  });
  subcommand("generate", "Prefix of the word directed by DIRECTIVE (--length letters)", 1, "DIRECTIVE", [&] {
    return detail::text(generate_prefix(directive(0), s.length));
  });
  subcommand("normalize", "Normal form of a finite SPINNED word or of a DIRECTIVE word", 1, "SPINNED|DIRECTIVE", [&] {
    if (looks_like_directive(arg(0))) return detail::text(render(normalize_directive(directive(0))));
    return detail::text(render(normalize_finite(spinned(0))));
  });
  subcommand("equivalent", "Whether two spinned words define the same morphism", 2, "SPINNED SPINNED", [&] {
    return detail::boolean(morphism_equal(spinned(0), spinned(1)));
  });
  subcommand("directs-same", "Whether two directive words direct the same word", 2, "DIRECTIVE DIRECTIVE", [&] {
    return detail::boolean(directs_same(directive(0), directive(1)));
  });
  subcommand("unique", "Whether the directed word has a unique directive word", 1, "DIRECTIVE", [&] {
    return detail::boolean(has_unique_directive(directive(0)));
  });
  subcommand("quasiperiodic", "Whether the directed word is quasiperiodic", 1, "DIRECTIVE", [&] {
    return detail::boolean(is_quasiperiodic(directive(0)));
  });
  subcommand("quasiperiods", "Quasiperiods with witnesses (first --limit when infinite)", 1, "DIRECTIVE", [&] {
    return detail::quasiperiod_outcome(find_witnesses(directive(0), s.limit));
  });
  subcommand("smallest-quasiperiod", "Smallest quasiperiod, or none", 1, "DIRECTIVE", [&] {
    auto q = smallest_quasiperiod(directive(0));
    outcome o;
    o.result = q ? json(*q) : json(nullptr);
    o.lines = {q ? *q : "none"};
    return o;
  });

  std::optional<std::size_t> max_length;
  std::optional<std::size_t> max_n;
  auto* ult = subcommand("ultimate-quasiperiods", "Ultimate quasiperiods (first --limit by default)", 1, "DIRECTIVE", [&] {
    auto d = directive(0);
    if (max_length) return detail::word_list(ultimate_quasiperiods_up_to(d, *max_length));
    if (max_n) return detail::word_list(ultimate_quasiperiods(d, *max_n));
    return detail::word_list(ultimate_quasiperiods_first(d, s.limit));
  });
  ult->add_option("--max-length", max_length, "All ultimate quasiperiods up to this length");
  ult->add_option("--max-n", max_n, "Union of the sets Q_n for n up to this index");

  subcommand("returns", "Return words to WORD in the directed word", 2, "WORD DIRECTIVE", [&] {
    return detail::word_list(detail::by_length(returns_to(plain(0), directive(1))));
  });
  subcommand("lyndon", "Lyndon test of a finite WORD or of the word directed by DIRECTIVE", 1, "WORD|DIRECTIVE", [&] {
    if (looks_like_directive(arg(0))) {
      auto d = directive(0);
      return detail::boolean(is_lyndon_episturmian(d, detail::alphabet_for(s, d.alphabet_mask(), 1)));
    }
    auto w = plain(0);
    return detail::boolean(finite_lyndon(w, detail::alphabet_for(s, mask_of(w), 1)));
  });
  subcommand("lyndon-preserving", "Whether the morphism of SPINNED preserves Lyndon words", 1, "SPINNED", [&] {
    auto d = spinned(0);
    return detail::boolean(is_lyndon_preserving(d, detail::alphabet_for(s, mask_of(d), 1)));
  });
  subcommand("strongly-quasiperiodic", "Strong quasiperiodicity of the morphism of SPINNED", 1, "SPINNED", [&] {
    auto d = spinned(0);
    return detail::strong_outcome(is_strongly_quasiperiodic(d, detail::alphabet_for(s, mask_of(d), 3)));
  });
  subcommand("lyndon-in-subshift", "Directive word of the Lyndon word LETTER s in the subshift", 2, "DIRECTIVE LETTER", [&] {
    const auto& a = arg(1);
    if (a.size() != 1 || !is_letter(a[0])) throw parse_error("invalid letter '" + a + "'", a);
    return detail::text(render(lyndon_word_in_subshift(directive(0), a[0])));
  });

  verify_options vopt;
  auto* ver = app.add_subcommand("verify", "Cross-check closed forms against the oracle");
  ver->add_option("--cases", vopt.cases, "Number of random directive words")->capture_default_str();
  ver->add_option("--seed", vopt.seed, "Random seed")->capture_default_str();
  ver->add_option("--threads", vopt.threads, "Worker threads (0: all cores)")->capture_default_str();
  ver->callback([&] {
    command = "verify";
    action = [&] {
      auto r = run_verify(vopt);
      outcome o;
      o.result = r.ok();
      json props = json::object();
      const char* names[] = {"a", "b", "c", "d", "e", "f"};
      for (std::size_t k = 0; k < 6; ++k) props[names[k]] = r.checks_by_property[k];
      o.witnesses = json{{"cases", r.cases},
                         {"checks", r.checks},
                         {"checks_by_property", props},
                         {"skipped", r.skipped},
                         {"discrepancies", r.discrepancies}};
      o.lines.push_back(std::string(r.ok() ? "PASS" : "FAIL") + " cases=" + std::to_string(r.cases) +
                        " checks=" + std::to_string(r.checks) + " skipped=" + std::to_string(r.skipped) +
                        " discrepancies=" + std::to_string(r.discrepancies.size()));
      for (const auto& d : r.discrepancies) o.lines.push_back(d);
      o.exit_code = r.ok() ? 0 : 1;
      return o;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    outcome o = action();
    if (s.json_output) {
      json doc{{"command", command}, {"input", args}, {"result", o.result}};
      if (o.witnesses) doc["witnesses"] = *o.witnesses;
      if (o.finiteness) doc["finiteness"] = *o.finiteness;
      out << doc.dump() << '\n';
    } else {
      for (const auto& line : o.lines) out << line << '\n';
    }
    return o.exit_code;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const precondition_error& e) {
    std::string input;
    for (const auto& a : args) input += (input.empty() ? "'" : " '") + a + "'";
    err << "error: " << e.what() << " (input " << input << ")\n";
    return 2;
  } catch (const stabilization_error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace episturmian::cli
