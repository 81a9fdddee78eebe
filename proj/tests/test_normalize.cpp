#include <gtest/gtest.h>

#include <map>
#include <random>
#include <string>

#include "episturmian/normalize.hpp"
#include "episturmian/text.hpp"

using namespace episturmian;

namespace {

spinned_word sw(const std::string& s) { return parse_spinned(s); }
directive_word dw(const std::string& s) { return parse_directive(s); }

spinned_word random_spinned(std::mt19937& rng, int alphabet, int len) {
  spinned_word w;
  for (int i = 0; i < len; ++i)
    w.push_back({static_cast<char>('a' + rng() % alphabet), rng() % 2 ? spin::R : spin::L});
  return w;
}

directive_word random_directive(std::mt19937& rng, int alphabet, int max_pre, int max_per) {
  for (;;) {
    directive_word d(random_spinned(rng, alphabet, static_cast<int>(rng() % (max_pre + 1))),
                     random_spinned(rng, alphabet, 1 + static_cast<int>(rng() % max_per)));
    if (is_valid(d)) return d;
  }
}

std::string images(const spinned_word& w, int alphabet) {
  std::string key;
  for (int c = 0; c < alphabet; ++c) key += apply_morphism(w, std::string(1, 'a' + c)) + "|";
  return key;
}

std::vector<spinned_word> all_spinned(int alphabet, int len) {
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

}  // namespace

TEST(BlockTransform, Examples) {
  EXPECT_EQ(render(block_transform(sw("BAbCbAC"), {0, 2, block_site::direction::RtoL})), "baBCbAC");
  EXPECT_EQ(render(block_transform(sw("aA"), {0, 1, block_site::direction::LtoR})), "Aa");
  auto w = sw("acbA");
  auto t = block_transform(w, {0, 3, block_site::direction::LtoR});
  EXPECT_EQ(render(t), "ACBa");
  EXPECT_EQ(block_transform(t, {0, 3, block_site::direction::RtoL}), w);
}

TEST(BlockTransform, InvalidSites) {
  for (block_site s : {block_site{0, 2, block_site::direction::LtoR}, block_site{0, 5, block_site::direction::RtoL},
                       block_site{1, 1, block_site::direction::LtoR}, block_site{1, 3, block_site::direction::RtoL}}) {
    try {
      block_transform(sw("aCbA"), s);
      ADD_FAILURE() << s.start << "," << s.end;
    } catch (const precondition_error& e) {
      EXPECT_STREQ(e.what(), "not a block occurrence");
    }
  }
  // interior letter equal to the delimiter
  EXPECT_THROW(block_transform(sw("aaA"), {0, 2, block_site::direction::LtoR}), precondition_error);
}

TEST(BlockTransform, PreservesMorphism) {
  std::mt19937 rng(3);
  int done = 0;
  while (done < 300) {
    auto w = random_spinned(rng, 3, 2 + static_cast<int>(rng() % 8));
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j < w.size(); ++j)
        for (auto dir : {block_site::direction::LtoR, block_site::direction::RtoL}) {
          block_site s{i, j, dir};
          if (!is_block_occurrence(w, s)) continue;
          ++done;
          EXPECT_EQ(images(block_transform(w, s), 3), images(w, 3));
        }
  }
}

TEST(NormalizeFinite, Examples) {
  EXPECT_EQ(render(normalize_finite(sw("ABcBaBACBACa"))), "ABcBaBacbAcA");
  EXPECT_TRUE(normalize_finite(sw("")).empty());
  EXPECT_EQ(render(normalize_finite(sw("Aa"))), "aA");
}

TEST(NormalizeFinite, Properties) {
  std::mt19937 rng(5);
  for (int t = 0; t < 2000; ++t) {
    auto w = random_spinned(rng, 3, static_cast<int>(rng() % 11));
    auto n = normalize_finite(w);
    ASSERT_EQ(images(n, 3), images(w, 3)) << render(w);
    ASSERT_FALSE(has_forbidden_factor(n)) << render(w);
    ASSERT_EQ(base_word(n), base_word(w));
    ASSERT_EQ(normalize_finite(n), n);
  }
}

TEST(NormalizeFinite, UniqueAmongEqualMorphisms) {
  for (int len = 0; len <= 6; ++len) {
    std::map<std::string, std::string> seen;
    for (const auto& w : all_spinned(3, len)) {
      auto key = images(w, 3);
      auto n = render(normalize_finite(w));
      auto [it, fresh] = seen.emplace(key, n);
      ASSERT_EQ(it->second, n) << render(w);
    }
  }
}

TEST(MorphismEqual, Examples) {
  EXPECT_TRUE(morphism_equal(sw("BAbCbAC"), sw("babcBAC")));
  EXPECT_TRUE(morphism_equal(sw("aBcA"), sw("aBcA")));
  EXPECT_FALSE(morphism_equal(sw("ab"), sw("ba")));
  EXPECT_TRUE(morphism_equal(sw("Aa"), sw("aA")));
  EXPECT_FALSE(morphism_equal(sw("a"), sw("A")));
}

TEST(MorphismEqual, AgreesWithImagesExhaustive) {
  auto words = all_spinned(2, 4);
  for (const auto& u : words)
    for (const auto& v : words) ASSERT_EQ(morphism_equal(u, v), images(u, 3) == images(v, 3));
}

TEST(NormalizeDirective, Examples) {
  EXPECT_EQ(render(normalize_directive(dw("aBCba(Ba)"))), "abc(Ba)");
  EXPECT_EQ(render(normalize_directive(dw("abc(Ba)"))), "abc(Ba)");
  EXPECT_EQ(render(normalize_directive(dw("BAb(cAB)"))), "ba(BcA)");
  EXPECT_EQ(render(normalize_directive(dw("(aBc)"))), "(aBc)");
  EXPECT_EQ(render(normalize_directive(dw("(ABc)"))), "(ABc)");
}

TEST(NormalizeDirective, Periodic) {
  EXPECT_EQ(render(normalize_directive(dw("a(b)"))), "a(b)");
  EXPECT_EQ(render(normalize_directive(dw("B(a)"))), "a(b)");
  EXPECT_EQ(render(normalize_directive(dw("(A)"))), "(a)");
  auto n = normalize_directive(dw("CaBaDc(d)"));
  EXPECT_EQ(generate_prefix(n, 500), generate_prefix(dw("CaBaDc(d)"), 500));
  EXPECT_FALSE(has_forbidden_factor(n.unroll(3)));
}

TEST(NormalizeDirective, RandomPreservesWord) {
  std::mt19937 rng(31);
  for (int t = 0; t < 400; ++t) {
    auto d = random_directive(rng, 2 + t % 3, 6, 6);
    auto n = normalize_directive(d);
    ASSERT_EQ(generate_prefix(n, 2000), generate_prefix(d, 2000)) << render(d);
    ASSERT_TRUE(has_spin(n.period(), spin::L)) << render(d);
    ASSERT_FALSE(has_forbidden_factor(n.unroll(3))) << render(d);
    ASSERT_EQ(normalize_directive(n), n) << render(d);
  }
}

TEST(NormalizeDirective, InvariantUnderBlockTransforms) {
  std::mt19937 rng(37);
  int done = 0;
  while (done < 200) {
    auto d = random_directive(rng, 3, 5, 4);
    if (is_periodic_word(d)) continue;
    auto w = d.unroll(2);
    std::vector<block_site> sites;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j < w.size(); ++j)
        for (auto dir : {block_site::direction::LtoR, block_site::direction::RtoL})
          if (is_block_occurrence(w, {i, j, dir})) sites.push_back({i, j, dir});
    if (sites.empty()) continue;
    ++done;
    auto v = block_transform(w, sites[rng() % sites.size()]);
    directive_word e(v, d.period());
    EXPECT_EQ(normalize_directive(e), normalize_directive(d)) << render(d);
    EXPECT_TRUE(directs_same(e, d));
  }
}

TEST(DirectsSame, Examples) {
  EXPECT_TRUE(directs_same(dw("bca(a)"), dw("bA(c)")));
  EXPECT_TRUE(directs_same(dw("(abc)"), dw("(abc)")));
  EXPECT_TRUE(directs_same(dw("abc(Ba)"), dw("aBCba(Ba)")));
  EXPECT_TRUE(directs_same(dw("a(b)"), dw("B(a)")));
  EXPECT_FALSE(directs_same(dw("(ab)"), dw("(ba)")));
  EXPECT_FALSE(directs_same(dw("(ab)"), dw("a(b)")));
  EXPECT_TRUE(directs_same(dw("BAb(cAB)"), dw("ba(BcA)")));
}

TEST(DirectsSame, AgreesWithPrefixes) {
  std::mt19937 rng(41);
  for (int t = 0; t < 3000; ++t) {
    auto a = random_directive(rng, 2, 2, 2);
    auto b = random_directive(rng, 2, 2, 2);
    bool same_prefix = generate_prefix(a, 600) == generate_prefix(b, 600);
    ASSERT_EQ(directs_same(a, b), same_prefix) << render(a) << " " << render(b);
    ASSERT_EQ(directs_same(b, a), same_prefix);
  }
}

TEST(UniqueDirective, Examples) {
  EXPECT_TRUE(has_unique_directive(dw("(aBc)")));
  EXPECT_FALSE(has_unique_directive(dw("(abc)")));
  EXPECT_FALSE(has_unique_directive(dw("abc(Ba)")));
  EXPECT_FALSE(has_unique_directive(dw("(a)")));
}

TEST(UniqueDirective, NoOtherDirectiveAmongSmallWords) {
  // A word with a unique directive is directed by no other small directive word.
  std::mt19937 rng(43);
  std::vector<directive_word> pool;
  for (int t = 0; t < 3000; ++t) pool.push_back(random_directive(rng, 3, 3, 3));
  for (int t = 0; t < 300; ++t) {
    const auto& d = pool[t];
    if (is_periodic_word(d) || !has_unique_directive(d)) continue;
    auto n = normalize_directive(d);
    auto p = generate_prefix(d, 800);
    for (const auto& e : pool) {
      if (generate_prefix(e, 800) != p) continue;
      EXPECT_TRUE(n.prefix(20) == e.prefix(20)) << render(d) << " vs " << render(e);
    }
  }
}
