#pragma once

#include <string>
#include <string_view>

#include "core.hpp"

namespace episturmian {

// Text encoding: lowercase letters carry spin L, uppercase letters spin R.
// An infinite directive word u v^omega is written "u(v)".

inline constexpr bool is_spinned_char(char c) noexcept {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline plain_word parse_plain(std::string_view text) {
  for (char c : text) {
    if (!is_letter(c))
      throw parse_error("invalid character '" + std::string(1, c) + "' in word '" +
                            std::string(text) + "'",
                        std::string(text));
  }
  return plain_word(text);
}

inline spinned_word parse_spinned(std::string_view text) {
  spinned_word out;
  out.reserve(text.size());
  for (char c : text) {
    if (c >= 'a' && c <= 'z')
      out.push_back({c, spin::L});
    else if (c >= 'A' && c <= 'Z')
      out.push_back({static_cast<char>(c - 'A' + 'a'), spin::R});
    else
      throw parse_error("invalid character '" + std::string(1, c) + "' in spinned word '" +
                            std::string(text) + "'",
                        std::string(text));
  }
  return out;
}

inline bool looks_like_directive(std::string_view text) noexcept {
  return text.find('(') != std::string_view::npos || text.find(')') != std::string_view::npos;
}

inline directive_word parse_directive(std::string_view text) {
  auto fail = [&](const std::string& why) {
    throw parse_error("invalid directive word '" + std::string(text) + "': " + why,
                      std::string(text));
  };
  auto open = text.find('(');
  if (open == std::string_view::npos) fail("missing '('");
  if (text.find('(', open + 1) != std::string_view::npos) fail("more than one '('");
  if (text.empty() || text.back() != ')') fail("missing trailing ')'");
  auto close = text.find(')');
  if (close != text.size() - 1) fail("')' must be the last character");
  if (close == open + 1) fail("empty period");
  std::string_view pre = text.substr(0, open);
  std::string_view per = text.substr(open + 1, close - open - 1);
  for (char c : text.substr(0, close)) {
    if (c != '(' && !is_spinned_char(c)) fail("invalid character '" + std::string(1, c) + "'");
  }
  return directive_word(parse_spinned(pre), parse_spinned(per));
}

inline char render_letter(spinned_letter x) noexcept {
  return x.sp == spin::L ? x.base : static_cast<char>(x.base - 'a' + 'A');
}

inline std::string render(const spinned_word& w) {
  std::string out;
  out.reserve(w.size());
  for (const auto& x : w) out.push_back(render_letter(x));
  return out;
}

inline std::string render(const directive_word& d) {
  return render(d.preperiod()) + "(" + render(d.period()) + ")";
}

}  // namespace episturmian
