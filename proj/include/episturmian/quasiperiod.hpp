#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"
#include "normalize.hpp"

namespace episturmian {

/// A quasiperiod written as mu_{w_spinned}(Pal(v)) p, with p a prefix of q_{w_spinned}.
struct quasiperiod_witness {
  spinned_word w_spinned;
  plain_word v;
  plain_word p;
  plain_word quasiperiod;

  friend bool operator==(const quasiperiod_witness&, const quasiperiod_witness&) = default;
};

enum class finiteness : std::uint8_t { Finite, Infinite };

struct quasiperiod_report {
  enum finiteness finiteness = finiteness::Finite;
  std::vector<quasiperiod_witness> items;
  // Infinite reports only: fewer items than requested because the next ones
  // exceed max_materialized_length.
  bool truncated = false;
};

/// Longest quasiperiod the enumeration will materialize.
inline constexpr std::size_t max_materialized_length = std::size_t{1} << 20;

namespace detail {

inline constexpr std::uint64_t length_cap = std::uint64_t{1} << 60;

using letter_counts = std::array<std::uint64_t, max_alphabet_size>;

inline std::uint64_t cap_add(std::uint64_t a, std::uint64_t b) {
  return std::min(length_cap, a + b);
}

inline std::uint64_t cap_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a >= length_cap / b) return length_cap;
  return std::min(length_cap, a * b);
}

inline std::uint64_t cap_sub(std::uint64_t a, std::uint64_t b) {
  return a >= length_cap ? length_cap : a - b;
}

inline std::uint64_t total(const letter_counts& c) {
  std::uint64_t t = 0;
  for (auto x : c) t = cap_add(t, x);
  return t;
}

/// Letter counts of Pal(v), extended one letter at a time.
class pal_counter {
 public:
  pal_counter() {
    history_.push_back({});
    last_.fill(-1);
  }

  void push(letter x) {
    int c = letter_index(x);
    letter_counts next = history_.back();
    if (last_[c] < 0) {
      for (auto& n : next) n = cap_mul(n, 2);
      next[c] = cap_add(next[c], 1);
    } else {
      const letter_counts& old = history_[static_cast<std::size_t>(last_[c])];
      for (int k = 0; k < max_alphabet_size; ++k) next[k] = cap_sub(cap_mul(next[k], 2), old[k]);
    }
    last_[c] = static_cast<std::ptrdiff_t>(history_.size() - 1);
    history_.push_back(next);
  }

  const letter_counts& counts() const { return history_.back(); }

 private:
  std::vector<letter_counts> history_;
  std::array<std::ptrdiff_t, max_alphabet_size> last_;
};

/// Image lengths |mu_w(c)| for a growing prefix w.
struct image_lengths {
  letter_counts len;

  image_lengths() { len.fill(1); }

  void push(letter x) {
    std::uint64_t lx = len[letter_index(x)];
    for (int c = 0; c < max_alphabet_size; ++c)
      if (c != letter_index(x)) len[c] = cap_add(len[c], lx);
  }

  std::uint64_t apply(const letter_counts& counts) const {
    std::uint64_t t = 0;
    for (int c = 0; c < max_alphabet_size; ++c) t = cap_add(t, cap_mul(counts[c], len[c]));
    return t;
  }
};

/// |q_w| computed from letter counts.
inline std::uint64_t residual_length(const spinned_word& w) {
  letter_counts q{};
  for (std::size_t i = w.size(); i-- > 0;) {
    int x = letter_index(w[i].base);
    std::uint64_t others = cap_sub(total(q), q[x]);
    q[x] = cap_add(q[x], others);
    if (w[i].sp == spin::L) q[x] = cap_add(q[x], 1);
  }
  return total(q);
}

struct candidate {
  spinned_word w;
  plain_word v;
  std::uint64_t a = 0;  // |mu_w(Pal(v))|
  std::uint64_t q = 0;  // |q_w|
};

/// Collects quasiperiod lengths, keeping the first witness for each length.
class length_table {
 public:
  explicit length_table(std::size_t keep) : keep_(keep) {}

  void add(const candidate& c, std::uint64_t upto) {
    std::uint64_t hi = std::min(cap_add(c.a, c.q), upto);
    if (keep_ > 0) hi = std::min(hi, cap_add(c.a, keep_ - 1));
    if (hi > max_materialized_length && hi >= c.a)
      throw precondition_error("quasiperiod too long to materialize");
    for (std::uint64_t len = c.a; len <= hi; ++len) {
      if (keep_ > 0 && items_.size() >= keep_ && len >= items_.rbegin()->first) break;
      if (items_.count(len)) continue;
      items_.emplace(len, std::pair<std::size_t, std::uint64_t>{store(c), len});
      if (keep_ > 0 && items_.size() > keep_) items_.erase(std::prev(items_.end()));
    }
  }

  bool full() const { return keep_ > 0 && items_.size() >= keep_; }

  std::uint64_t cutoff() const {
    return full() ? items_.rbegin()->first : std::numeric_limits<std::uint64_t>::max();
  }

  const std::map<std::uint64_t, std::pair<std::size_t, std::uint64_t>>& items() const {
    return items_;
  }
  const std::vector<candidate>& sources() const { return sources_; }

 private:
  std::size_t store(const candidate& c) {
    if (sources_.empty() || sources_.back().w != c.w || sources_.back().v != c.v) sources_.push_back(c);
    return sources_.size() - 1;
  }

  std::size_t keep_;
  std::map<std::uint64_t, std::pair<std::size_t, std::uint64_t>> items_;
  std::vector<candidate> sources_;
};

/// Scans positions i of a normalized directive word for quasiperiod decompositions.
/// The visitor receives each candidate and returns the length bound it still needs;
/// candidates with a larger mu_w(Pal(v)) length end the current L-run scan.
class decomposition_scanner {
 public:
  explicit decomposition_scanner(const directive_word& n) : n_(n) {
    std::size_t np = n.preperiod().size();
    suffix_mask_.assign(np + 1, n.ult_mask());
    for (std::size_t i = np; i-- > 0;) suffix_mask_[i] = suffix_mask_[i + 1] | mask_of(n[i].base);
  }

  letter_mask suffix_mask(std::size_t i) const {
    return i < suffix_mask_.size() ? suffix_mask_[i] : suffix_mask_.back();
  }

  /// Candidates whose decomposition ends at position i; prefix_lengths holds |mu_{N[0..i)}(c)|.
  template <class Visit, class Bound>
  void scan(std::size_t i, const image_lengths& prefix_lengths, Visit&& visit, Bound&& bound) const {
    letter_mask need = suffix_mask(i);
    if (n_[i].sp == spin::L) {
      spinned_word w = n_.prefix(i);
      std::uint64_t q = residual_length(w);
      pal_counter pc;
      plain_word v;
      extend(i, need, w, q, pc, v, prefix_lengths, visit, bound);
      return;
    }
    letter a = n_[i].base;
    std::optional<std::size_t> s;
    for (std::size_t k = i; k-- > 0;) {
      spinned_letter y = n_[k];
      if (y.base == a && y.sp == spin::L) {
        s = k;
        break;
      }
      if (y.base != a && y.sp == spin::R) return;
    }
    if (!s) return;
    spinned_word w = n_.prefix(*s);
    for (std::size_t k = *s; k < i; ++k) w.push_back({n_[k].base, spin::R});
    std::uint64_t q = residual_length(w);
    pal_counter pc;
    plain_word v(1, a);
    pc.push(a);
    extend(i + 1, need, w, q, pc, v, prefix_lengths, visit, bound, true);
  }

 private:
  template <class Visit, class Bound>
  void extend(std::size_t j, letter_mask need, const spinned_word& w, std::uint64_t q,
              pal_counter& pc, plain_word& v, const image_lengths& lens, Visit&& visit,
              Bound&& bound, bool seeded = false) const {
    if (seeded && mask_of(v) == need) {
      candidate c{w, v, lens.apply(pc.counts()), q};
      if (c.a > bound()) return;
      visit(c);
    }
    for (;; ++j) {
      if (n_[j].sp != spin::L) return;
      v.push_back(n_[j].base);
      pc.push(n_[j].base);
      std::uint64_t a = lens.apply(pc.counts());
      if (a > bound() || a >= length_cap) return;
      if (mask_of(v) == need) visit(candidate{w, v, a, q});
    }
  }

  const directive_word& n_;
  std::vector<letter_mask> suffix_mask_;
};

inline quasiperiod_report materialize(const length_table& table, const directive_word& d,
                                      enum finiteness fin) {
  quasiperiod_report report;
  report.finiteness = fin;
  if (table.items().empty()) return report;
  std::uint64_t longest = table.items().rbegin()->first;
  if (longest > max_materialized_length)
    throw precondition_error("quasiperiod too long to materialize");
  plain_word t = generate_prefix(d, static_cast<std::size_t>(longest));
  for (const auto& [len, ref] : table.items()) {
    const candidate& c = table.sources()[ref.first];
    quasiperiod_witness w;
    w.w_spinned = c.w;
    w.v = c.v;
    w.quasiperiod = t.substr(0, static_cast<std::size_t>(len));
    w.p = t.substr(static_cast<std::size_t>(c.a), static_cast<std::size_t>(len - c.a));
    report.items.push_back(std::move(w));
  }
  return report;
}

inline quasiperiod_report aperiodic_witnesses(const directive_word& n, std::size_t limit) {
  const std::size_t np = n.preperiod().size();
  const std::size_t pp = n.period().size();
  decomposition_scanner scanner(n);

  // Decide finiteness: a decomposition in the second period window repeats forever.
  bool infinite = false;
  {
    image_lengths lens;
    for (std::size_t i = 0; i < np + 2 * pp && !infinite; ++i) {
      if (i >= np + pp) {
        scanner.scan(
            i, lens, [&](const candidate&) { infinite = true; },
            [&] { return infinite ? std::uint64_t{0} : length_cap; });
      }
      lens.push(n[i].base);
    }
  }

  if (!infinite) {
    length_table table(0);
    image_lengths lens;
    for (std::size_t i = 0; i < np + 2 * pp; ++i) {
      scanner.scan(
          i, lens, [&](const candidate& c) { table.add(c, length_cap); },
          [] { return length_cap; });
      lens.push(n[i].base);
    }
    return materialize(table, n, finiteness::Finite);
  }

  length_table table(std::max<std::size_t>(limit, 1));
  image_lengths lens;
  letter_mask ult = n.ult_mask();
  for (std::size_t i = 0;; ++i) {
    std::uint64_t lower = length_cap;
    for (int c = 0; c < max_alphabet_size; ++c)
      if (ult & (letter_mask{1} << c)) lower = std::min(lower, lens.len[c]);
    if (table.full() && table.cutoff() <= lower) break;
    if (lower > max_materialized_length) break;
    auto bound = [&] { return std::min<std::uint64_t>(table.cutoff(), max_materialized_length); };
    scanner.scan(
        i, lens, [&](const candidate& c) { table.add(c, bound()); }, bound);
    lens.push(n[i].base);
  }
  auto report = materialize(table, n, finiteness::Infinite);
  report.truncated = !table.full();
  return report;
}

inline quasiperiod_report periodic_witnesses(const directive_word& d, std::size_t limit) {
  auto reps = periodic_representations(d);
  const directive_word& main = reps.front();
  letter x = main.period().front().base;
  std::uint64_t root = primitive_root(apply_morphism(main.preperiod(), std::string(1, x))).size();
  if (apply_morphism(main.preperiod(), std::string(1, x)).size() != root)
    throw std::logic_error("letter image of a periodic normal form is not primitive");

  length_table table(std::max<std::size_t>(limit, 1));
  for (const auto& rep : reps) {
    decomposition_scanner scanner(rep);
    image_lengths lens;
    for (std::size_t i = 0; i < rep.preperiod().size(); ++i) {
      scanner.scan(
          i, lens, [&](const candidate& c) { table.add(c, root - 1); },
          [&] { return std::min(root - 1, table.cutoff()); });
      lens.push(rep[i].base);
    }
  }
  // Every length from |r| on: mu_{u x^k}(Pal(x)) = r followed by a prefix of q_{u x^k}.
  spinned_word w = main.preperiod();
  for (std::uint64_t len = root; !table.full(); ++len) {
    while (cap_add(root, residual_length(w)) < len) w.push_back({x, spin::L});
    candidate c{w, plain_word(1, x), root, residual_length(w)};
    table.add(c, len);
  }
  return materialize(table, main, finiteness::Infinite);
}

}  // namespace detail

/// Quasiperiods of the directed word with their decompositions.
inline quasiperiod_report find_witnesses(const directive_word& d, std::size_t limit = 32) {
  require_valid(d);
  if (mask_size(d.ult_mask()) == 1) return detail::periodic_witnesses(d, limit);
  return detail::aperiodic_witnesses(normalize_directive(d), limit);
}

inline bool is_quasiperiodic(const directive_word& d) {
  require_valid(d);
  if (mask_size(d.ult_mask()) == 1) return true;
  directive_word n = normalize_directive(d);
  detail::decomposition_scanner scanner(n);
  detail::image_lengths lens;
  bool found = false;
  for (std::size_t i = 0; i < n.preperiod().size() + 2 * n.period().size() && !found; ++i) {
    scanner.scan(
        i, lens, [&](const detail::candidate&) { found = true; },
        [&] { return found ? std::uint64_t{0} : detail::length_cap; });
    lens.push(n[i].base);
  }
  return found;
}

inline std::optional<plain_word> smallest_quasiperiod(const directive_word& d) {
  auto report = find_witnesses(d, 1);
  if (report.items.empty()) return std::nullopt;
  return report.items.front().quasiperiod;
}

// ---------------------------------------------------------------------------
// Ultimate quasiperiods and return words

namespace detail {

/// Data for u_{n+1} = Pal(x_1..x_n) over the base word of d.
struct pal_levels {
  plain_word base;             // x_1 .. x_N
  std::vector<std::size_t> len;  // len[k] = |Pal(x_1..x_k)|
  std::size_t m = 0;           // first n with full alphabet
  letter_mask alphabet = 0;
  letter_mask ult = 0;
  std::size_t np = 0;

  pal_levels(const directive_word& d, std::size_t n) {
    base = base_word(d.prefix(n));
    len = pal_lengths(base);
    alphabet = d.alphabet_mask();
    ult = d.ult_mask();
    np = d.preperiod().size();
    letter_mask seen = 0;
    for (std::size_t k = 0; k < base.size(); ++k) {
      seen |= mask_of(base[k]);
      if (seen == alphabet) {
        m = k + 1;
        break;
      }
    }
  }

  /// Alph(x_i x_{i+1} ...) for 1-based i.
  letter_mask suffix_alphabet(std::size_t i) const {
    letter_mask s = ult;
    for (std::size_t k = i - 1; k < np; ++k) s |= mask_of(base[k]);
    return s;
  }

  /// p_n, 1-based.
  std::size_t p(std::size_t n) const {
    letter_mask seen = 0;
    for (std::size_t i = n; i >= 1; --i) {
      seen |= mask_of(base[i - 1]);
      if (seen == suffix_alphabet(i)) return i;
    }
    return 0;
  }

  /// |u_{n+1}| - |u_{p_n}|.
  std::size_t lower(std::size_t n) const { return len[n] - len[p(n) - 1]; }
};

inline void add_factors(const plain_word& u, std::size_t lo, std::size_t hi, std::set<plain_word>& out) {
  for (std::size_t k = lo; k <= std::min(hi, u.size()); ++k)
    for (std::size_t s = 0; s + k <= u.size(); ++s) out.insert(u.substr(s, k));
}

inline std::vector<plain_word> sorted_by_length(const std::set<plain_word>& s) {
  std::vector<plain_word> out(s.begin(), s.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const plain_word& a, const plain_word& b) { return a.size() < b.size(); });
  return out;
}

inline constexpr std::size_t max_palindrome_length = std::size_t{1} << 24;

}  // namespace detail

/// Union of Q_n for m <= n <= max_n.
inline std::vector<plain_word> ultimate_quasiperiods(const directive_word& d, std::size_t max_n) {
  require_valid(d);
  detail::pal_levels lv(d, max_n);
  std::set<plain_word> out;
  if (lv.m == 0) return {};
  for (std::size_t n = lv.m; n <= max_n; ++n) {
    if (lv.len[n] > detail::max_palindrome_length)
      throw precondition_error("palindromic prefix too long to enumerate");
    detail::add_factors(pal(lv.base.substr(0, n)), lv.lower(n), lv.len[n], out);
  }
  return detail::sorted_by_length(out);
}

/// Ultimate quasiperiods of length at most max_length.
inline std::vector<plain_word> ultimate_quasiperiods_up_to(const directive_word& d,
                                                           std::size_t max_length) {
  require_valid(d);
  std::set<plain_word> out;
  for (std::size_t horizon = 16;; horizon *= 2) {
    detail::pal_levels lv(d, horizon);
    if (lv.m == 0) {
      if (horizon > d.preperiod().size() + d.period().size()) return {};
      continue;
    }
    bool done = false;
    for (std::size_t n = lv.m; n < horizon; ++n) {
      if (lv.len[n] - lv.len[n - 1] > max_length) {
        done = true;
        break;
      }
      std::size_t lo = lv.lower(n);
      if (lo > max_length) continue;
      if (lv.len[n] > detail::max_palindrome_length)
        throw precondition_error("palindromic prefix too long to enumerate");
      detail::add_factors(pal(lv.base.substr(0, n)), lo, max_length, out);
    }
    if (done) return detail::sorted_by_length(out);
    out.clear();
  }
}

/// The first `limit` ultimate quasiperiods by length.
inline std::vector<plain_word> ultimate_quasiperiods_first(const directive_word& d, std::size_t limit) {
  for (std::size_t max_length = 8;; max_length *= 2) {
    auto all = ultimate_quasiperiods_up_to(d, max_length);
    if (all.size() >= limit) {
      all.resize(limit);
      return all;
    }
    if (max_length > detail::max_palindrome_length) return all;
  }
}

/// Returns to the factor v in the directed word.
inline std::set<plain_word> returns_to(const plain_word& v, const directive_word& d) {
  require_valid(d);
  if (v.empty()) throw precondition_error("empty pattern");
  bool periodic = mask_size(d.ult_mask()) == 1;
  if (periodic && detail::primitive_root(v) != v)
    throw precondition_error("returns in a periodic word require a primitive factor");
  const std::size_t bound = std::max<std::size_t>(4096, 16 * v.size());
  const std::size_t np = d.preperiod().size() + d.period().size() + 1;
  directive_word base = d.base();
  plain_word u;
  std::vector<std::size_t> len{0};
  std::array<std::ptrdiff_t, max_alphabet_size> last;
  last.fill(-1);
  for (std::size_t n = 0;; ++n) {
    std::size_t at = u.find(v);
    if (at != plain_word::npos) {
      plain_word f = u.substr(0, at);
      spinned_word prefix = base.prefix(n);
      letter_mask rest = d.ult_mask();
      for (std::size_t k = n; k < d.preperiod().size(); ++k) rest |= mask_of(d[k].base);
      std::set<plain_word> out;
      for (letter x : letters_of(rest)) {
        plain_word img = apply_morphism(prefix, std::string(1, x)) + f;
        out.insert(img.substr(f.size()));
      }
      return out;
    }
    if ((u.size() > bound && n > np) || u.size() > detail::max_palindrome_length)
      throw precondition_error("not a factor of the directed word");
    letter x = base[n].base;
    int c = letter_index(x);
    plain_word next = u;
    if (last[c] < 0) {
      next.push_back(x);
      next += u;
    } else {
      next.append(u, len[static_cast<std::size_t>(last[c])]);
    }
    u = std::move(next);
    last[c] = static_cast<std::ptrdiff_t>(n);
    len.push_back(u.size());
  }
}

}  // namespace episturmian
