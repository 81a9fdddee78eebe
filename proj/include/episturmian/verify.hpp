#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "classify.hpp"
#include "core.hpp"
#include "normalize.hpp"
#include "oracle.hpp"
#include "quasiperiod.hpp"
#include "text.hpp"

namespace episturmian {

// Cross-checks of the closed-form modules against the oracle on random directive words.

struct verify_options {
  std::size_t cases = 500;
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct verify_report {
  std::size_t cases = 0;
  std::size_t checks = 0;
  std::array<std::size_t, 6> checks_by_property{};  // (a) .. (f)
  std::size_t skipped = 0;  // quasiperiods too long for a cover check
  std::vector<std::string> discrepancies;

  bool ok() const noexcept { return discrepancies.empty(); }
};

namespace detail {

inline constexpr std::size_t verify_max_cover_length = 100000;

inline directive_word random_case(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size(2, 4), pre_len(0, 6), per_len(1, 6), coin(0, 1);
  for (;;) {
    int m = size(rng);
    std::uniform_int_distribution<int> pick(0, m - 1);
    auto word = [&](int n) {
      spinned_word w;
      for (int i = 0; i < n; ++i)
        w.push_back({static_cast<letter>('a' + pick(rng)), coin(rng) ? spin::R : spin::L});
      return w;
    };
    directive_word d(word(pre_len(rng)), word(per_len(rng)));
    if (is_valid(d)) return d;
  }
}

struct case_result {
  std::array<std::size_t, 6> checks{};
  std::size_t skipped = 0;
  std::vector<std::string> discrepancies;
};

inline case_result verify_case(const directive_word& d, std::mt19937_64& rng) {
  case_result out;
  const std::string name = render(d);
  auto fail = [&](const std::string& what) { out.discrepancies.push_back(name + ": " + what); };
  auto check = [&](int property, bool ok, const std::string& what) {
    ++out.checks[static_cast<std::size_t>(property)];
    if (!ok) fail(what);
  };
  const plain_word t = generate_prefix(d, 10000);

  // (a) normalization preserves the word
  check(0, generate_prefix(normalize_directive(d), 2000) == t.substr(0, 2000), "normalization changes the word");

  // (b) reported quasiperiods cover
  bool qp = is_quasiperiodic(d);
  auto report = find_witnesses(d, 8);
  check(1, qp == !report.items.empty(), "is_quasiperiodic disagrees with find_witnesses");
  for (const auto& w : report.items) {
    if (w.quasiperiod.size() > verify_max_cover_length) {
      ++out.skipped;
      continue;
    }
    auto prefix = generate_prefix(d, std::max<std::size_t>(10000, 20 * w.quasiperiod.size()));
    check(1, covers_prefix(w.quasiperiod, prefix).verdict, "quasiperiod " + w.quasiperiod + " does not cover");
  }

  // (c) negative verdicts have no short cover
  if (!qp) check(2, quasiperiods_of_prefix(t, 60).empty(), "oracle finds a quasiperiod of a non-quasiperiodic word");

  // (d) return words
  std::uniform_int_distribution<std::size_t> len(1, 8), at(0, 2000);
  for (int k = 0; k < 3; ++k) {
    plain_word v = t.substr(at(rng), len(rng));
    if (occurrences(v, t).size() < 50) continue;
    try {
      check(3, returns_to(v, d) == returns_naive(v, t), "returns to " + v + " disagree");
    } catch (const precondition_error&) {
      // non-primitive factor of a periodic word
    }
  }

  // (e), (f) Lyndon verdicts
  std::string letters = ordered_alphabet::alphabetical(letter_index(*letters_of(d.alphabet_mask()).rbegin()) + 1).letters();
  for (int k = 0; k < 2; ++k) {
    if (k == 1) std::shuffle(letters.begin(), letters.end(), rng);
    ordered_alphabet order(letters);
    if (!is_lyndon_episturmian(d, order)) continue;
    check(4, !lyndon_prefix_check(t, order, 5000).has_value(), "Lyndon verdict violated for order " + letters);
    check(5, !qp, "Lyndon word reported quasiperiodic");
    check(5, has_unique_directive(d), "Lyndon word without a unique directive word");
  }
  return out;
}

}  // namespace detail

inline verify_report run_verify(const verify_options& opt = {}) {
  verify_report report;
  report.cases = opt.cases;
  std::vector<directive_word> words;
  std::vector<std::uint64_t> seeds;
  std::mt19937_64 master(opt.seed);
  for (std::size_t i = 0; i < opt.cases; ++i) {
    words.push_back(detail::random_case(master));
    seeds.push_back(master());
  }
  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, opt.cases)));
  std::vector<detail::case_result> results(opt.cases);
  auto worker = [&](unsigned id) {
    for (std::size_t i = id; i < opt.cases; i += threads) {
      std::mt19937_64 rng(seeds[i]);
      try {
        results[i] = detail::verify_case(words[i], rng);
      } catch (const std::exception& e) {
        results[i].discrepancies.push_back(render(words[i]) + ": " + e.what());
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
  for (auto& th : pool) th.join();
  for (auto& r : results) {
    for (std::size_t k = 0; k < r.checks.size(); ++k) {
      report.checks_by_property[k] += r.checks[k];
      report.checks += r.checks[k];
    }
    report.skipped += r.skipped;
    report.discrepancies.insert(report.discrepancies.end(), r.discrepancies.begin(), r.discrepancies.end());
  }
  return report;
}

}  // namespace episturmian
