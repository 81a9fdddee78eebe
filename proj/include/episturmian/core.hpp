#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace episturmian {

/// Letters are the characters 'a' to 'z'.
using letter = char;

/// A finite word over the base alphabet.
using plain_word = std::string;

inline constexpr int max_alphabet_size = 26;

enum class spin : std::uint8_t { L, R };

struct spinned_letter {
  letter base = 'a';
  spin sp = spin::L;

  friend auto operator<=>(const spinned_letter&, const spinned_letter&) = default;
};

using spinned_word = std::vector<spinned_letter>;

/// Raised when an input violates an operation's precondition.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised on malformed text; carries the offending token.
class parse_error : public precondition_error {
 public:
  parse_error(const std::string& message, std::string token)
      : precondition_error(message), token_(std::move(token)) {}

  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// Raised when normalization of an infinite directive word fails to settle.
class stabilization_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Letters and alphabets

inline constexpr bool is_letter(char c) noexcept { return c >= 'a' && c <= 'z'; }

inline constexpr int letter_index(letter c) noexcept { return c - 'a'; }

/// Bit set of letters, bit i standing for 'a' + i.
using letter_mask = std::uint32_t;

inline constexpr letter_mask mask_of(letter c) noexcept {
  return letter_mask{1} << letter_index(c);
}

inline letter_mask mask_of(std::string_view w) noexcept {
  letter_mask m = 0;
  for (char c : w) m |= mask_of(c);
  return m;
}

inline letter_mask mask_of(const spinned_word& w) noexcept {
  letter_mask m = 0;
  for (const auto& x : w) m |= mask_of(x.base);
  return m;
}

inline int mask_size(letter_mask m) noexcept { return __builtin_popcount(m); }

inline std::set<letter> letters_of(letter_mask m) {
  std::set<letter> out;
  for (int i = 0; i < max_alphabet_size; ++i)
    if (m & (letter_mask{1} << i)) out.insert(static_cast<letter>('a' + i));
  return out;
}

/// Letter order a_1 < a_2 < ... < a_m.
class ordered_alphabet {
 public:
  /// The first `size` letters in alphabetical order.
  static ordered_alphabet alphabetical(int size) {
    if (size < 1 || size > max_alphabet_size)
      throw precondition_error("alphabet size out of range");
    std::string s;
    for (int i = 0; i < size; ++i) s.push_back(static_cast<char>('a' + i));
    return ordered_alphabet(s);
  }

  explicit ordered_alphabet(std::string_view letters) : letters_(letters) {
    rank_.fill(-1);
    if (letters_.empty()) throw parse_error("empty alphabet order", std::string(letters));
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      char c = letters_[i];
      if (!is_letter(c))
        throw parse_error(std::string("invalid letter '") + c + "' in alphabet order",
                          std::string(letters));
      if (rank_[letter_index(c)] >= 0)
        throw parse_error(std::string("repeated letter '") + c + "' in alphabet order",
                          std::string(letters));
      rank_[letter_index(c)] = static_cast<int>(i);
    }
  }

  bool contains(letter c) const noexcept { return is_letter(c) && rank_[letter_index(c)] >= 0; }

  /// Zero-based rank; -1 for letters outside the alphabet.
  int rank(letter c) const noexcept { return is_letter(c) ? rank_[letter_index(c)] : -1; }

  int size() const noexcept { return static_cast<int>(letters_.size()); }
  letter at(int i) const { return letters_.at(static_cast<std::size_t>(i)); }
  letter min() const noexcept { return letters_.front(); }
  const std::string& letters() const noexcept { return letters_; }
  letter_mask mask() const noexcept { return mask_of(letters_); }

  bool covers(letter_mask m) const noexcept { return (m & ~mask()) == 0; }

  /// Lexicographic comparison of plain words under this order.
  std::strong_ordering compare(std::string_view u, std::string_view v) const noexcept {
    std::size_t n = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i] != v[i]) return rank(u[i]) <=> rank(v[i]);
    }
    return u.size() <=> v.size();
  }

  friend bool operator==(const ordered_alphabet& a, const ordered_alphabet& b) {
    return a.letters_ == b.letters_;
  }

 private:
  std::string letters_;
  std::array<int, max_alphabet_size> rank_{};
};

// ---------------------------------------------------------------------------
// Spinned words

inline plain_word base_word(const spinned_word& w) {
  plain_word out;
  out.reserve(w.size());
  for (const auto& x : w) out.push_back(x.base);
  return out;
}

inline spinned_word all_L(std::string_view w) {
  spinned_word out;
  out.reserve(w.size());
  for (char c : w) out.push_back({c, spin::L});
  return out;
}

inline spinned_word all_R(std::string_view w) {
  spinned_word out;
  out.reserve(w.size());
  for (char c : w) out.push_back({c, spin::R});
  return out;
}

/// The opposite word: every spin exchanged.
inline spinned_word opposite(spinned_word w) {
  for (auto& x : w) x.sp = x.sp == spin::L ? spin::R : spin::L;
  return w;
}

inline spinned_word concat(spinned_word a, const spinned_word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline bool has_spin(const spinned_word& w, spin s) {
  return std::any_of(w.begin(), w.end(), [s](const spinned_letter& x) { return x.sp == s; });
}

// ---------------------------------------------------------------------------
// Morphisms

/// L_x(w) or R_x(w) according to the spin of x.
inline plain_word apply_elementary(spinned_letter x, std::string_view w) {
  plain_word out;
  out.reserve(2 * w.size());
  for (char b : w) {
    if (b == x.base) {
      out.push_back(b);
    } else if (x.sp == spin::L) {
      out.push_back(x.base);
      out.push_back(b);
    } else {
      out.push_back(b);
      out.push_back(x.base);
    }
  }
  return out;
}

/// mu_d(w); the last letter of d acts first.
inline plain_word apply_morphism(const spinned_word& d, std::string_view w) {
  plain_word out(w);
  for (auto it = d.rbegin(); it != d.rend(); ++it) out = apply_elementary(*it, out);
  return out;
}

namespace detail {

/// mu_{d[0..k)}(w) truncated to its first n letters.
inline plain_word apply_prefix(const spinned_word& d, std::size_t k, plain_word w,
                               std::size_t n) {
  if (w.size() > n) w.resize(n);
  for (std::size_t i = k; i-- > 0;) {
    spinned_letter x = d[i];
    plain_word out;
    out.reserve(std::min(n, 2 * w.size()));
    for (char b : w) {
      if (out.size() >= n) break;
      if (b == x.base) {
        out.push_back(b);
      } else if (x.sp == spin::L) {
        out.push_back(x.base);
        out.push_back(b);
      } else {
        out.push_back(b);
        out.push_back(x.base);
      }
    }
    if (out.size() > n) out.resize(n);
    w = std::move(out);
  }
  return w;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Palindromes

inline bool is_palindrome(std::string_view w) noexcept {
  return std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(w.size() / 2), w.rbegin());
}

/// Lengths |Pal(w[0..k))| for k = 0..|w|.
inline std::vector<std::size_t> pal_lengths(std::string_view w) {
  std::vector<std::size_t> len{0};
  std::array<std::ptrdiff_t, max_alphabet_size> last;
  last.fill(-1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    int c = letter_index(w[i]);
    std::size_t cur = len.back();
    if (last[c] < 0)
      len.push_back(2 * cur + 1);
    else
      len.push_back(2 * cur - len[static_cast<std::size_t>(last[c])]);
    last[c] = static_cast<std::ptrdiff_t>(i);
  }
  return len;
}

/// Iterated palindromic closure.
inline plain_word pal(std::string_view w) {
  plain_word u;
  std::vector<std::size_t> len{0};
  std::array<std::ptrdiff_t, max_alphabet_size> last;
  last.fill(-1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    int c = letter_index(w[i]);
    plain_word next;
    if (last[c] < 0) {
      next.reserve(2 * u.size() + 1);
      next = u;
      next.push_back(w[i]);
      next += u;
    } else {
      next = u;
      next.append(u, len[static_cast<std::size_t>(last[c])]);
    }
    u = std::move(next);
    last[c] = static_cast<std::ptrdiff_t>(i);
    len.push_back(u.size());
  }
  return u;
}

/// Shortest palindrome having w as a prefix.
inline plain_word palindromic_closure(std::string_view w) {
  std::size_t k = 0;
  while (k < w.size() && !is_palindrome(w.substr(k))) ++k;
  plain_word head(w.substr(0, k));
  plain_word out(w);
  out.append(head.rbegin(), head.rend());
  return out;
}

/// S_d, the shift between mu_d and mu_{base(d)}.
inline plain_word shifting_factor(const spinned_word& d) {
  plain_word s;
  for (std::size_t i = d.size(); i-- > 0;) {
    s = apply_elementary({d[i].base, spin::L}, s);
    if (d[i].sp == spin::R) s.push_back(d[i].base);
  }
  return s;
}

/// q_d = S_d^{-1} Pal(base(d)).
inline plain_word residual_suffix(const spinned_word& d) {
  plain_word q;
  for (std::size_t i = d.size(); i-- > 0;) {
    q = apply_elementary(d[i], q);
    if (d[i].sp == spin::L) q.push_back(d[i].base);
  }
  return q;
}

// ---------------------------------------------------------------------------
// Ultimately periodic directive words

/// u v^omega, kept with a primitive period and a minimal preperiod.
class directive_word {
 public:
  directive_word(spinned_word preperiod, spinned_word period)
      : pre_(std::move(preperiod)), per_(std::move(period)) {
    if (per_.empty()) throw precondition_error("directive word period is empty");
    canonicalize();
  }

  const spinned_word& preperiod() const noexcept { return pre_; }
  const spinned_word& period() const noexcept { return per_; }

  spinned_letter operator[](std::size_t i) const {
    if (i < pre_.size()) return pre_[i];
    return per_[(i - pre_.size()) % per_.size()];
  }

  spinned_word prefix(std::size_t n) const {
    spinned_word out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back((*this)[i]);
    return out;
  }

  /// Preperiod followed by k copies of the period.
  spinned_word unroll(std::size_t k) const { return prefix(pre_.size() + k * per_.size()); }

  letter_mask alphabet_mask() const noexcept { return mask_of(pre_) | mask_of(per_); }
  letter_mask ult_mask() const noexcept { return mask_of(per_); }

  /// The word with every spin set to L.
  directive_word base() const { return directive_word(all_L(base_word(pre_)), all_L(base_word(per_))); }

  friend bool operator==(const directive_word&, const directive_word&) = default;

 private:
  void canonicalize() {
    std::size_t n = per_.size();
    for (std::size_t p = 1; p < n; ++p) {
      if (n % p != 0) continue;
      bool ok = true;
      for (std::size_t i = p; i < n && ok; ++i) ok = per_[i] == per_[i - p];
      if (ok) {
        per_.resize(p);
        break;
      }
    }
    while (!pre_.empty() && pre_.back() == per_.back()) {
      pre_.pop_back();
      std::rotate(per_.rbegin(), per_.rbegin() + 1, per_.rend());
    }
  }

  spinned_word pre_;
  spinned_word per_;
};

inline std::set<letter> alphabet_of(const directive_word& d) { return letters_of(d.alphabet_mask()); }

inline std::set<letter> ult_of(const directive_word& d) { return letters_of(d.ult_mask()); }

/// Whether d directs an episturmian word at all.
inline bool is_valid(const directive_word& d) noexcept {
  return has_spin(d.period(), spin::L) || mask_size(d.ult_mask()) == 1;
}

inline void require_valid(const directive_word& d) {
  if (!is_valid(d)) throw precondition_error("unsupported directive word");
}

inline bool is_periodic_word(const directive_word& d) {
  require_valid(d);
  return mask_size(d.ult_mask()) == 1;
}

/// First n letters of the episturmian word directed by d.
inline plain_word generate_prefix(const directive_word& d, std::size_t n) {
  require_valid(d);
  if (n == 0) return {};
  if (mask_size(d.ult_mask()) == 1) {
    plain_word block = apply_morphism(d.preperiod(), std::string(1, d.period().front().base));
    plain_word out;
    out.reserve(n + block.size());
    while (out.size() < n) out += block;
    out.resize(n);
    return out;
  }
  // len[c] = |mu_{d[0..k)}(c)|, saturated at n.
  std::array<std::size_t, max_alphabet_size> len;
  len.fill(1);
  letter_mask alph = d.alphabet_mask();
  std::size_t k = 0;
  spinned_word used;
  for (;; ++k) {
    spinned_letter x = d[k];
    used.push_back(x);
    if (x.sp == spin::L && len[letter_index(x.base)] >= n) break;
    std::size_t lx = len[letter_index(x.base)];
    for (int c = 0; c < max_alphabet_size; ++c) {
      if (!(alph & (letter_mask{1} << c)) || c == letter_index(x.base)) continue;
      len[c] = std::min(n, len[c] + lx);
    }
  }
  return detail::apply_prefix(used, k, std::string(1, d[k].base), n);
}

}  // namespace episturmian
