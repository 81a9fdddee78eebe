#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"

namespace episturmian {

/// An occurrence of x v x-bar (LtoR) or x-bar v-bar x (RtoL) spanning [start, end].
struct block_site {
  enum class direction : std::uint8_t { LtoR, RtoL };

  std::size_t start = 0;
  std::size_t end = 0;
  direction dir = direction::LtoR;

  friend bool operator==(const block_site&, const block_site&) = default;
};

inline bool is_block_occurrence(const spinned_word& w, const block_site& site) {
  if (site.end >= w.size() || site.start >= site.end) return false;
  spin outer = site.dir == block_site::direction::LtoR ? spin::L : spin::R;
  spin inner = outer;
  spin closing = outer == spin::L ? spin::R : spin::L;
  letter x = w[site.start].base;
  if (w[site.start].sp != outer || w[site.end].base != x || w[site.end].sp != closing) return false;
  for (std::size_t i = site.start + 1; i < site.end; ++i) {
    if (w[i].base == x || w[i].sp != inner) return false;
  }
  return true;
}

/// Replaces x v x-bar by x-bar v-bar x or conversely.
inline spinned_word block_transform(spinned_word w, const block_site& site) {
  if (!is_block_occurrence(w, site)) throw precondition_error("not a block occurrence");
  for (std::size_t i = site.start; i <= site.end; ++i)
    w[i].sp = w[i].sp == spin::L ? spin::R : spin::L;
  return w;
}

namespace detail {

/// For the L letter at j, the nearest i < j inside the maximal R-run ending at j-1
/// with w[i] = base(w[j]) spinned R.
inline std::optional<std::size_t> forbidden_start(const spinned_word& w, std::size_t j) {
  if (w[j].sp != spin::L) return std::nullopt;
  for (std::size_t i = j; i-- > 0;) {
    if (w[i].sp != spin::R) break;
    if (w[i].base == w[j].base) return i;
  }
  return std::nullopt;
}

}  // namespace detail

/// Whether w has a factor a-bar (R letters)* a.
inline bool has_forbidden_factor(const spinned_word& w) {
  for (std::size_t j = 0; j < w.size(); ++j)
    if (detail::forbidden_start(w, j)) return true;
  return false;
}

/// The block-equivalent word with no factor a-bar (R letters)* a.
inline spinned_word normalize_finite(spinned_word w) {
  std::size_t j = 0;
  while (j < w.size()) {
    if (auto i = detail::forbidden_start(w, j)) {
      for (std::size_t k = *i; k <= j; ++k) w[k].sp = w[k].sp == spin::L ? spin::R : spin::L;
      j = *i;
    } else {
      ++j;
    }
  }
  return w;
}

namespace detail {

inline spinned_word strip_trailing_base(spinned_word w, letter x) {
  while (!w.empty() && w.back().base == x) w.pop_back();
  return w;
}

/// Normal form of w x^omega as a preperiod ending in a letter other than x.
inline spinned_word push_tail(spinned_word w, letter x) {
  w = strip_trailing_base(std::move(w), x);
  for (int round = 0; round < 16; ++round) {
    spinned_word ext = w;
    ext.insert(ext.end(), w.size() + 2, spinned_letter{x, spin::L});
    w = strip_trailing_base(normalize_finite(std::move(ext)), x);
    spinned_word check = w;
    check.insert(check.end(), 2, spinned_letter{x, spin::L});
    if (!has_forbidden_factor(check)) return w;
  }
  throw stabilization_error("normalization did not stabilize");
}

/// Order on spinned letters: by base letter, then L before R.
inline bool spinned_less(spinned_letter a, spinned_letter b) {
  if (a.base != b.base) return a.base < b.base;
  return a.sp == spin::L && b.sp == spin::R;
}

inline bool directive_less(const directive_word& a, const directive_word& b) {
  std::size_t n = std::max(a.preperiod().size(), b.preperiod().size()) +
                  2 * std::max(a.period().size(), b.period().size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return spinned_less(a[i], b[i]);
  }
  return false;
}

/// Normalized representations u x^omega of a periodic word: the normal form of the input
/// and the one obtained by exchanging the last two letters' roles.
inline std::vector<directive_word> periodic_representations(const directive_word& d) {
  letter x = d.period().front().base;
  spinned_word pre1 = push_tail(d.preperiod(), x);
  std::vector<directive_word> reps{directive_word(pre1, {spinned_letter{x, spin::L}})};
  if (!pre1.empty()) {
    spinned_letter z = pre1.back();
    spinned_word w(pre1.begin(), pre1.end() - 1);
    w.push_back({x, z.sp == spin::L ? spin::R : spin::L});
    reps.emplace_back(push_tail(std::move(w), z.base), spinned_word{spinned_letter{z.base, spin::L}});
  }
  return reps;
}

inline directive_word normalize_periodic(const directive_word& d) {
  auto reps = periodic_representations(d);
  auto best = std::min_element(reps.begin(), reps.end(), directive_less);
  return *best;
}

inline bool is_normalized_candidate(const directive_word& c) {
  return is_valid(c) && mask_size(c.ult_mask()) > 1 && has_spin(c.period(), spin::L) &&
         !has_forbidden_factor(c.unroll(3));
}

}  // namespace detail

/// Normalized directive word directing the same episturmian word.
inline directive_word normalize_directive(const directive_word& d) {
  require_valid(d);
  if (mask_size(d.ult_mask()) == 1) return detail::normalize_periodic(d);
  const std::size_t np = d.preperiod().size();
  const std::size_t pp = d.period().size();
  const std::size_t check_len = 2000;
  const plain_word expected = generate_prefix(d, check_len);
  for (std::size_t k : {3, 6, 12, 24, 48, 64}) {
    spinned_word n = normalize_finite(d.unroll(k));
    std::size_t stable = np + (k - 2) * pp;
    for (std::size_t p = 1; p <= 2 * pp; ++p) {
      if (stable < 3 * p) break;
      std::size_t s = stable - p;
      while (s > 0 && n[s - 1] == n[s - 1 + p]) --s;
      if (stable - s < 3 * p) continue;
      directive_word cand(spinned_word(n.begin(), n.begin() + static_cast<std::ptrdiff_t>(s)),
                          spinned_word(n.begin() + static_cast<std::ptrdiff_t>(s),
                                       n.begin() + static_cast<std::ptrdiff_t>(s + p)));
      if (!detail::is_normalized_candidate(cand)) continue;
      if (generate_prefix(cand, check_len) != expected) continue;
      return cand;
    }
  }
  throw stabilization_error("normalization did not stabilize");
}

/// Whether mu_u = mu_v.
inline bool morphism_equal(const spinned_word& u, const spinned_word& v) {
  bool by_normal_form =
      base_word(u) == base_word(v) && normalize_finite(u) == normalize_finite(v);
  bool by_images = true;
  letter_mask m = mask_of(u) | mask_of(v);
  m |= (m + 1) & ~m;
  for (int c = 0; c < max_alphabet_size && by_images; ++c) {
    if (!(m & (letter_mask{1} << c))) continue;
    std::string a(1, static_cast<char>('a' + c));
    by_images = apply_morphism(u, a) == apply_morphism(v, a);
  }
  if (by_normal_form != by_images)
    throw std::logic_error("normal form and letter images disagree on morphism equality");
  return by_normal_form;
}

namespace detail {

inline plain_word primitive_root(const plain_word& w) {
  std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p == 0 && w.compare(p, n - p, w, 0, n - p) == 0) return w.substr(0, p);
  }
  return w;
}

inline plain_word periodic_root(const directive_word& d) {
  return primitive_root(apply_morphism(d.preperiod(), std::string(1, d.period().front().base)));
}

}  // namespace detail

/// Whether both words direct the same episturmian word.
inline bool directs_same(const directive_word& a, const directive_word& b) {
  require_valid(a);
  require_valid(b);
  bool pa = mask_size(a.ult_mask()) == 1;
  bool pb = mask_size(b.ult_mask()) == 1;
  if (pa != pb) return false;
  if (pa) return detail::periodic_root(a) == detail::periodic_root(b);
  return normalize_directive(a) == normalize_directive(b);
}

/// Whether the directed word has exactly one spinned directive word.
inline bool has_unique_directive(const directive_word& d) {
  require_valid(d);
  if (mask_size(d.ult_mask()) == 1) return false;
  directive_word n = normalize_directive(d);
  if (!has_spin(n.period(), spin::L) || !has_spin(n.period(), spin::R)) return false;
  spinned_word w = n.unroll(3);
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j].sp != spin::R) continue;
    for (std::size_t i = j; i-- > 0;) {
      if (w[i].sp != spin::L) break;
      if (w[i].base == w[j].base) return false;
    }
  }
  return true;
}

}  // namespace episturmian
