#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"

namespace episturmian {

// Definition-level algorithms on finite prefixes.

/// Start indices of u in w, ascending; overlapping occurrences included.
inline std::vector<std::size_t> occurrences(std::string_view u, std::string_view w) {
  if (u.empty()) throw precondition_error("empty pattern");
  std::vector<std::size_t> fail(u.size(), 0);
  for (std::size_t i = 1, k = 0; i < u.size(); ++i) {
    while (k > 0 && u[i] != u[k]) k = fail[k - 1];
    if (u[i] == u[k]) ++k;
    fail[i] = k;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0, k = 0; i < w.size(); ++i) {
    while (k > 0 && w[i] != u[k]) k = fail[k - 1];
    if (w[i] == u[k]) ++k;
    if (k == u.size()) {
      out.push_back(i + 1 - u.size());
      k = fail[k - 1];
    }
  }
  return out;
}

struct cover_evidence {
  plain_word quasiperiod;
  std::vector<std::size_t> positions;
  std::size_t max_gap = 0;
  bool verdict = false;
};

/// Whether the occurrences of u cover w, tolerating an uncovered tail of |u|-1 letters.
inline cover_evidence covers_prefix(std::string_view u, std::string_view w) {
  cover_evidence ev;
  ev.quasiperiod = plain_word(u);
  ev.positions = occurrences(u, w);
  for (std::size_t i = 1; i < ev.positions.size(); ++i)
    ev.max_gap = std::max(ev.max_gap, ev.positions[i] - ev.positions[i - 1]);
  ev.verdict = !ev.positions.empty() && ev.positions.front() == 0 && ev.max_gap <= u.size() &&
               w.size() - ev.positions.back() - u.size() < u.size();
  return ev;
}

namespace detail {

/// z[i] = length of the longest common prefix of w and w[i..]; z[0] = |w|.
inline std::vector<std::size_t> z_function(std::string_view w) {
  std::size_t n = w.size();
  std::vector<std::size_t> z(n, 0);
  if (n == 0) return z;
  z[0] = n;
  for (std::size_t i = 1, l = 0, r = 0; i < n; ++i) {
    if (i < r) z[i] = std::min(r - i, z[i - l]);
    while (i + z[i] < n && w[z[i]] == w[i + z[i]]) ++z[i];
    if (i + z[i] > r) {
      l = i;
      r = i + z[i];
    }
  }
  return z;
}

}  // namespace detail

/// Prefixes u of w with 1 <= |u| <= max_len that cover w.
inline std::vector<plain_word> quasiperiods_of_prefix(std::string_view w, std::size_t max_len) {
  std::vector<plain_word> out;
  auto z = detail::z_function(w);
  std::size_t n = w.size();
  for (std::size_t len = 1; len <= std::min(max_len, n); ++len) {
    std::size_t last = 0;
    bool ok = true;
    for (std::size_t i = 1; i + len <= n && ok; ++i) {
      if (z[i] < len) continue;
      ok = i - last <= len;
      last = i;
    }
    if (ok && n - last - len < len) out.emplace_back(w.substr(0, len));
  }
  return out;
}

/// Words between consecutive occurrence starts of v in w.
inline std::set<plain_word> returns_naive(std::string_view v, std::string_view w) {
  auto pos = occurrences(v, w);
  if (pos.size() < 2) throw precondition_error("insufficient occurrences");
  std::set<plain_word> out;
  for (std::size_t i = 1; i < pos.size(); ++i)
    out.emplace(w.substr(pos[i - 1], pos[i] - pos[i - 1]));
  return out;
}

/// First i in [1, depth] whose suffix is smaller than w on the comparable range.
inline std::optional<std::size_t> lyndon_prefix_check(std::string_view w,
                                                      const ordered_alphabet& order,
                                                      std::size_t depth) {
  auto z = detail::z_function(w);
  for (std::size_t i = 1; i <= depth && i < w.size(); ++i) {
    std::size_t k = z[i];
    if (i + k >= w.size()) continue;
    if (order.rank(w[i + k]) < order.rank(w[k])) return i;
  }
  return std::nullopt;
}

/// Whether occurrences of the patterns cover w from position 0 without gaps,
/// tolerating an uncovered tail shorter than the longest pattern.
inline bool covers_with(const std::vector<plain_word>& patterns, std::string_view w) {
  std::size_t longest = 0;
  std::vector<std::size_t> reach(w.size(), 0);
  for (const auto& u : patterns) {
    if (u.empty()) continue;
    longest = std::max(longest, u.size());
    for (std::size_t p : occurrences(u, w)) reach[p] = std::max(reach[p], p + u.size());
  }
  if (w.empty()) return true;
  if (reach[0] == 0) return false;
  std::size_t need = w.size() + 1 > longest ? w.size() + 1 - longest : 0;
  std::size_t covered = 0;
  for (std::size_t i = 0; i < need; ++i) {
    if (i >= covered && reach[i] == 0) return false;
    covered = std::max(covered, reach[i]);
  }
  return true;
}

}  // namespace episturmian
