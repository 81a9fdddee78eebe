#pragma once

#include <random>
#include <string>
#include <vector>

#include "episturmian/core.hpp"
#include "episturmian/text.hpp"

namespace support {

using namespace episturmian;

inline spinned_word sw(const std::string& s) { return parse_spinned(s); }
inline directive_word dw(const std::string& s) { return parse_directive(s); }

inline std::string random_plain(std::mt19937& rng, int alphabet, int len) {
  std::string w;
  for (int i = 0; i < len; ++i) w.push_back(static_cast<char>('a' + rng() % alphabet));
  return w;
}

inline spinned_word random_spinned(std::mt19937& rng, int alphabet, int len) {
  spinned_word w;
  for (int i = 0; i < len; ++i)
    w.push_back({static_cast<char>('a' + rng() % alphabet), rng() % 2 ? spin::R : spin::L});
  return w;
}

inline directive_word random_directive(std::mt19937& rng, int alphabet, int max_pre, int max_per) {
  for (;;) {
    directive_word d(random_spinned(rng, alphabet, static_cast<int>(rng() % (max_pre + 1))),
                     random_spinned(rng, alphabet, 1 + static_cast<int>(rng() % max_per)));
    if (is_valid(d)) return d;
  }
}

inline std::vector<std::string> all_words(int alphabet, int len) {
  std::vector<std::string> out{""};
  for (int i = 0; i < len; ++i) {
    std::vector<std::string> next;
    for (const auto& w : out)
      for (int c = 0; c < alphabet; ++c) next.push_back(w + static_cast<char>('a' + c));
    out = std::move(next);
  }
  return out;
}

inline std::vector<spinned_word> all_spinned(int alphabet, int len) {
  std::vector<spinned_word> out{{}};
  for (int i = 0; i < len; ++i) {
    std::vector<spinned_word> next;
    for (const auto& w : out)
      for (int c = 0; c < alphabet; ++c)
        for (spin s : {spin::L, spin::R}) {
          auto v = w;
          v.push_back({static_cast<char>('a' + c), s});
          next.push_back(v);
        }
    out = std::move(next);
  }
  return out;
}

}  // namespace support
