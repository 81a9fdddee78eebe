#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "episturmian/cli.hpp"
#include "episturmian/episturmian.hpp"

using namespace episturmian;

namespace {

std::string cli(std::vector<std::string> args) {
  args.insert(args.begin(), "episturmian");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  if (cli::run(static_cast<int>(argv.size()), argv.data(), out, err) != 0) return "error: " + err.str();
  return out.str();
}

std::string lines(const std::vector<std::string>& ls) {
  std::string s;
  for (const auto& l : ls) s += l + "\n";
  return s;
}

directive_word dw(const std::string& s) { return parse_directive(s); }

struct criterion {
  int id;
  std::string name;
  double budget;  // seconds, 0: none
  std::function<bool(std::string&)> body;
};

bool tribonacci(std::string& why) {
  if (cli({"generate", "(abc)", "--length", "36"}) != lines({"abacabaabacababacabaabacabacabaabaca"}))
    return why = "generate", false;
  if (cli({"returns", "abacaba", "(abc)"}) != lines({"abac", "abacab", "abacaba"})) return why = "returns", false;
  if (cli({"smallest-quasiperiod", "(abc)"}) != lines({"abacaba"})) return why = "smallest-quasiperiod", false;
  return true;
}

bool fibonacci(std::string& why) {
  if (cli({"smallest-quasiperiod", "(ab)"}) != lines({"aba"})) return why = "smallest-quasiperiod", false;
  std::vector<std::string> expected{"aba",       "abaab",      "baaba",      "abaaba",     "aababaab",
                                    "abaababa",  "ababaaba",   "baababaa",   "aababaaba",  "abaababaa",
                                    "baababaab", "abaababaab", "baababaaba", "abaababaaba"};
  if (cli({"ultimate-quasiperiods", "(ab)", "--max-length", "11"}) != lines(expected))
    return why = "ultimate-quasiperiods", false;
  return true;
}

bool pal_identities(std::string& why) {
  if (pal("caab") != "cacacbcacac") return why = "Pal(caab)", false;
  if (apply_morphism(all_L("c"), pal("aab")) != "cacacbcaca") return why = "mu_c(Pal(aab))", false;
  if (apply_morphism(all_L("ca"), pal("ab")) != "cacacbca") return why = "mu_ca(Pal(ab))", false;
  return true;
}

bool normalization(std::string& why) {
  if (render(normalize_finite(parse_spinned("ABcBaBACBACa"))) != "ABcBaBacbAcA") return why = "library", false;
  if (cli({"normalize", "ABcBaBACBACa"}) != lines({"ABcBaBacbAcA"})) return why = "cli", false;
  return true;
}

bool decisions(std::string& why) {
  for (std::string s : {"(aBC)", "(aBcAbC)", "(aBAcaABcbcB)"})
    if (cli({"quasiperiodic", s}) != lines({"false"})) return why = s, false;
  if (cli({"quasiperiodic", "abAbcC(Abc)"}) != lines({"true"})) return why = "abAbcC(Abc)", false;
  return true;
}

bool counting(std::string& why) {
  if (cli({"quasiperiods", "adbcD(aBC)"}) != lines({"Finite", "adabadacadabada"})) return why = "adbcD(aBC)", false;
  if (cli({"quasiperiods", "cbaa(ABc)"}) != lines({"Finite", "cbcacbc", "cbcacbcacbc"}))
    return why = "cbaa(ABc)", false;

  auto d = dw("abc(Ba)");
  auto r = find_witnesses(d, 7);
  if (r.finiteness != finiteness::Infinite || r.items.size() != 7) return why = "abc(Ba) finiteness", false;
  auto t = generate_prefix(d, 10000);
  std::string w = "aBC";
  for (std::size_t i = 0; i < 3; ++i) {
    auto base = apply_morphism(parse_spinned(w), "bab");
    for (const auto& q : {base, base + "a"}) {
      const auto& got = r.items[q == base ? 1 + 2 * i : 2 + 2 * i].quasiperiod;
      if (got != q) return why = "abc(Ba) item " + got, false;
      if (!covers_prefix(q, t).verdict) return why = "abc(Ba) cover " + q, false;
    }
    w += "BA";
  }

  for (std::size_t k = 2; k <= 3; ++k) {
    auto s = find_witnesses(dw(std::string(k - 1, 'd') + "abcA(bCA)"));
    if (s.finiteness != finiteness::Finite || s.items.size() != k) return why = "d-family k=" + std::to_string(k), false;
  }
  return true;
}

bool lyndon(std::string& why) {
  ordered_alphabet order("abcd");
  if (!is_lyndon_episturmian(dw("BCaDCbDCb(Dcc)"), order)) return why = "BCaDCbDCb(Dcc)", false;
  if (!is_lyndon_episturmian(dw("aa(Dc)"), order)) return why = "aa(Dc)", false;
  if (is_lyndon_episturmian(dw("CaBaDc(d)"), order)) return why = "CaBaDc(d)", false;
  if (is_lyndon_episturmian(dw("(aBc)"), order)) return why = "(aBc)", false;
  if (!has_unique_directive(dw("(aBc)"))) return why = "(aBc) unique", false;
  return true;
}

bool property_suite(std::string& why) {
  auto r = run_verify({});
  why = "cases=" + std::to_string(r.cases) + " checks=" + std::to_string(r.checks) +
        " skipped=" + std::to_string(r.skipped) + " discrepancies=" + std::to_string(r.discrepancies.size());
  for (const auto& d : r.discrepancies) std::cerr << d << '\n';
  return r.cases >= 500 && r.ok();
}

bool strong(std::string& why) {
  auto abc = ordered_alphabet::alphabetical(3);
  auto yes = is_strongly_quasiperiodic(parse_spinned("ABCAB"), abc);
  if (!yes.verdict) return why = "ABCAB", false;

  auto no = is_strongly_quasiperiodic({}, abc);
  if (no.verdict || !no.witness) return why = "empty word verdict", false;
  auto image = generate_prefix(*no.witness, 10000);
  if (!quasiperiods_of_prefix(image, 100).empty()) return why = "empty word witness is covered", false;

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, 2), len(3, 9);
  int tried = 0;
  while (tried < 200) {
    std::string v;
    for (int n = len(rng); static_cast<int>(v.size()) < n;) v += static_cast<char>('a' + pick(rng));
    if (mask_of(v) != abc.mask()) continue;
    ++tried;
    auto r = is_strongly_quasiperiodic(all_L(v), abc);
    if (!r.verdict || r.condition != strong_qp_condition::I) return why = "clause I for " + v, false;
    auto q = pal(v);
    for (int k = 0; k < 20; ++k) {
      std::string w;
      for (int i = 0; i < 60; ++i) w += static_cast<char>('a' + pick(rng));
      if (!covers_prefix(q, apply_morphism(all_L(v), w)).verdict) return why = "Pal(" + v + ") cover of " + w, false;
    }
  }
  why = "all-L words checked=" + std::to_string(tried);
  return true;
}

}  // namespace

int main() {
  std::vector<criterion> criteria{
      {1, "tribonacci", 1, tribonacci},
      {2, "fibonacci", 0, fibonacci},
      {3, "pal identities", 0, pal_identities},
      {4, "normalization", 0, normalization},
      {5, "quasiperiod decisions", 0, decisions},
      {6, "counting", 5, counting},
      {7, "lyndon", 0, lyndon},
      {8, "property suite", 60, property_suite},
      {9, "strongly quasiperiodic morphisms", 0, strong},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::string why;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.body(why);
    } catch (const std::exception& e) {
      why = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.budget > 0 && secs >= c.budget) {
      ok = false;
      why += " over time budget";
    }
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << ' ' << c.id << ' ' << c.name << " (" << secs << " s)";
    if (!why.empty()) std::cout << ": " << why;
    std::cout << '\n';
  }
  return failed == 0 ? 0 : 1;
}
