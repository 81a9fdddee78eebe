#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "normalize.hpp"
#include "quasiperiod.hpp"

namespace episturmian {

enum class strong_qp_condition : std::uint8_t { I, II, III };

struct strong_qp_verdict {
  bool verdict = false;
  std::optional<strong_qp_condition> condition;
  // For negative verdicts: a directive word whose directed word has a
  // non-quasiperiodic image under the morphism.
  std::optional<directive_word> witness;
};

namespace detail {

inline void require_letters(letter_mask m, const ordered_alphabet& order) {
  if (!order.covers(m)) {
    for (letter c : letters_of(m & ~order.mask()))
      throw precondition_error(std::string("letter '") + c + "' is not in the alphabet");
  }
}

inline letter_mask run_mask(const spinned_word& u, std::size_t from, std::size_t to) {
  letter_mask m = 0;
  for (std::size_t k = from; k < to; ++k) m |= mask_of(u[k].base);
  return m;
}

inline std::size_t l_run_end(const spinned_word& u, std::size_t from) {
  while (from < u.size() && u[from].sp == spin::L) ++from;
  return from;
}

/// u = w a v_1 a-bar ... v_k a-bar v y with Alph(a v) the whole alphabet.
inline bool clause_one(const spinned_word& u, letter_mask all) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    letter a = u[i].base;
    if (u[i].sp == spin::L) {
      if ((mask_of(a) | run_mask(u, i + 1, l_run_end(u, i + 1))) == all) return true;
      continue;
    }
    for (std::size_t k = i; k-- > 0;) {
      if (u[k].base == a && u[k].sp == spin::L) {
        if ((mask_of(a) | run_mask(u, i + 1, l_run_end(u, i + 1))) == all) return true;
        break;
      }
      if (u[k].base != a && u[k].sp == spin::R) break;
    }
  }
  return false;
}

/// u = w a-bar v-bar y-bar with Alph(v) = A \ {a}; r is the start of the trailing R-run.
inline bool clause_two_for(const spinned_word& u, std::size_t r, letter a, letter_mask all) {
  letter_mask want = all & ~mask_of(a);
  for (std::size_t k = r; k < u.size(); ++k) {
    if (u[k].base != a) continue;
    std::size_t e = k + 1;
    while (e < u.size() && u[e].base != a) ++e;
    if (run_mask(u, k + 1, e) == want) return true;
  }
  return false;
}

/// u = w v a-bar y-bar with v an L-spinned word and Alph(v) = A \ {a}.
inline bool clause_three_shape(const spinned_word& u, std::size_t r, letter a, letter_mask all) {
  if (r == 0 || r >= u.size() || u[r].base != a) return false;
  std::size_t k = r;
  while (k > 0 && u[k - 1].sp == spin::L && u[k - 1].base != a) --k;
  return run_mask(u, k, r) == (all & ~mask_of(a));
}

inline std::vector<letter> others_in_order(const ordered_alphabet& order, letter a) {
  std::vector<letter> out;
  for (letter c : order.letters())
    if (c != a) out.push_back(c);
  return out;
}

/// First period of length m or m + 1 over the alphabet, in enumeration order, accepted by pred.
template <class Pred>
std::optional<spinned_word> first_period(const ordered_alphabet& alphabet, Pred pred) {
  const std::size_t m = alphabet.size();
  for (std::size_t len = m; len <= m + 1; ++len) {
    std::vector<std::size_t> digit(len, 0);
    for (;;) {
      spinned_word per(len);
      for (std::size_t k = 0; k < len; ++k)
        per[k] = {alphabet.at(static_cast<int>(digit[k] / 2)), digit[k] % 2 ? spin::R : spin::L};
      directive_word probe({}, per);
      if (is_valid(probe) && mask_size(probe.ult_mask()) > 1 && pred(per)) return per;
      std::size_t k = len;
      while (k > 0 && ++digit[k - 1] == 2 * m) digit[--k] = 0;
      if (k == 0) break;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Whether mu_d maps every infinite word over the alphabet to a quasiperiodic word.
inline strong_qp_verdict is_strongly_quasiperiodic(const spinned_word& d, const ordered_alphabet& alphabet) {
  if (alphabet.size() < 3) throw precondition_error("unsupported alphabet size");
  detail::require_letters(mask_of(d), alphabet);
  const letter_mask all = alphabet.mask();
  spinned_word u = normalize_finite(d);

  if (detail::clause_one(u, all)) return {true, strong_qp_condition::I, std::nullopt};

  std::size_t r = u.size();
  while (r > 0 && u[r - 1].sp == spin::R) --r;
  std::vector<letter> failing;
  for (letter a : alphabet.letters())
    if (!detail::clause_two_for(u, r, a, all)) failing.push_back(a);
  if (failing.empty()) return {true, strong_qp_condition::II, std::nullopt};
  if (failing.size() == 1 && detail::clause_three_shape(u, r, failing.front(), all))
    return {true, strong_qp_condition::III, std::nullopt};

  spinned_word period;
  if (u.empty()) {
    period.push_back({alphabet.at(0), spin::L});
    for (letter c : detail::others_in_order(alphabet, alphabet.at(0))) period.push_back({c, spin::R});
  } else if (u.back().sp == spin::L) {
    letter a = u.back().base;
    for (letter c : detail::others_in_order(alphabet, a)) period.push_back({c, spin::R});
    period.push_back({a, spin::L});
  } else if (detail::run_mask(u, r, u.size()) != all) {
    letter a = 0;
    for (letter c : alphabet.letters())
      if (!(detail::run_mask(u, r, u.size()) & mask_of(c))) {
        a = c;
        break;
      }
    auto rest = detail::others_in_order(alphabet, a);
    if (rest.front() == u.back().base) std::swap(rest[0], rest[1]);
    period = {{a, spin::L}};
    for (letter c : rest) period.push_back({c, spin::R});
  } else {
    letter a = failing.front();
    for (letter c : failing)
      if (!detail::clause_three_shape(u, r, c, all)) {
        a = c;
        break;
      }
    auto rest = detail::others_in_order(alphabet, a);
    period = {{a, spin::L}, {rest.front(), spin::L}};
    for (std::size_t k = 1; k < rest.size(); ++k) period.push_back({rest[k], spin::R});
  }
  auto non_qp = [&u](const spinned_word& per) {
    return !is_quasiperiodic(directive_word(u, per));
  };
  if (!non_qp(period)) {
    auto found = detail::first_period(alphabet, non_qp);
    if (!found) throw std::logic_error("no non-quasiperiodic image found");
    period = *found;
  }
  return {false, std::nullopt, directive_word({}, period)};
}

/// Whether the directed word is an infinite Lyndon word for the given order.
inline bool is_lyndon_episturmian(const directive_word& d, const ordered_alphabet& order) {
  require_valid(d);
  detail::require_letters(d.alphabet_mask(), order);
  if (mask_size(d.ult_mask()) == 1) return false;
  directive_word n = normalize_directive(d);
  if (!has_spin(n.period(), spin::R) || !has_spin(n.period(), spin::L)) return false;
  spinned_word w = n.unroll(3);
  // Blocks R* L with non-decreasing L letters and R letters above their block's L letter.
  int previous = -1;
  std::size_t start = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k].sp == spin::R) continue;
    int rank = order.rank(w[k].base);
    if (rank < previous) return false;
    for (std::size_t i = start; i < k; ++i)
      if (order.rank(w[i].base) <= rank) return false;
    previous = rank;
    start = k + 1;
  }
  return true;
}

/// Whether w is strictly smaller than each of its proper suffixes.
inline bool finite_lyndon(std::string_view w, const ordered_alphabet& order) {
  if (w.empty()) throw precondition_error("empty word has no Lyndon status");
  detail::require_letters(mask_of(w), order);
  for (std::size_t i = 1; i < w.size(); ++i)
    if (order.compare(w, w.substr(i)) >= 0) return false;
  return true;
}

/// Whether d is in ({a_2-bar..a_m-bar}* a_1)* {a_m-bar}*, i.e. mu_d preserves Lyndon words.
inline bool is_lyndon_preserving(const spinned_word& d, const ordered_alphabet& order) {
  detail::require_letters(mask_of(d), order);
  spinned_word u = normalize_finite(d);
  std::size_t last_L = u.size();
  for (std::size_t k = 0; k < u.size(); ++k)
    if (u[k].sp == spin::L) last_L = k;
  for (std::size_t k = 0; k < u.size(); ++k) {
    bool tail = last_L == u.size() || k > last_L;
    if (u[k].sp == spin::L) {
      if (u[k].base != order.at(0)) return false;
    } else if (tail) {
      if (u[k].base != order.at(order.size() - 1)) return false;
    } else if (u[k].base == order.at(0)) {
      return false;
    }
  }
  return true;
}

/// Directive word of the infinite Lyndon word a s in the subshift of the epistandard word s.
inline directive_word lyndon_word_in_subshift(const directive_word& d, letter a) {
  bool epistandard = !has_spin(d.preperiod(), spin::R) && !has_spin(d.period(), spin::R);
  if (!epistandard || d.ult_mask() != d.alphabet_mask() || !(d.alphabet_mask() & mask_of(a)) ||
      mask_size(d.ult_mask()) < 2)
    throw precondition_error("requires a strict epistandard directive word");
  auto respin = [a](spinned_word w) {
    for (auto& x : w) x.sp = x.base == a ? spin::L : spin::R;
    return w;
  };
  return directive_word(respin(d.preperiod()), respin(d.period()));
}

}  // namespace episturmian
