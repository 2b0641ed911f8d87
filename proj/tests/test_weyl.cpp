#include <gtest/gtest.h>

#include <set>

#include "strata/weyl.hpp"
#include "support.hpp"

using namespace strata;

TEST(Weyl, GroupOrders) {
  // |W| and number of positive roots for small types.
  const std::vector<std::tuple<std::string, std::size_t, std::size_t>> cases = {
      {"A1", 2, 1}, {"A2", 6, 3}, {"A3", 24, 6}, {"A4", 120, 10}, {"D4", 192, 12}};
  for (const auto& [name, order, roots] : cases) {
    WeylGroup g(DynkinDiagram::parse(name));
    EXPECT_EQ(g.elements().size(), order) << name;
    EXPECT_EQ(g.positive_roots().size(), roots) << name;
    EXPECT_EQ(static_cast<std::size_t>(g.length(g.longest())), roots) << name;
  }
  for (const auto& [name, roots] : std::vector<std::pair<std::string, int>>{{"E6", 36}, {"E7", 63}, {"E8", 120}, {"A5", 15}})
    EXPECT_EQ(WeylGroup(DynkinDiagram::parse(name)).length(WeylGroup(DynkinDiagram::parse(name)).longest()), roots);
}

TEST(Weyl, ParseAndFormat) {
  EXPECT_EQ(parse_word("s1 s3 s2"), (Word{0, 2, 1}));
  EXPECT_EQ(parse_word(""), Word{});
  EXPECT_EQ(parse_word("  "), Word{});
  EXPECT_EQ(format_word({0, 2, 1}), "s1 s3 s2");
  EXPECT_THROW(parse_word("s0"), InvalidWord);
  EXPECT_THROW(parse_word("t1"), InvalidWord);
  WeylGroup g(DynkinDiagram::parse("A3"));
  EXPECT_THROW(g.parse("s4"), std::exception);
  EXPECT_THROW(DynkinDiagram::parse("B3"), std::invalid_argument);
  EXPECT_THROW(DynkinDiagram::parse("D3"), std::invalid_argument);
}

TEST(Weyl, PermutationsMatchWordProducts) {
  WeylGroup g(DynkinDiagram::parse("A4"));
  std::mt19937_64 rng(21);
  for (const auto& w : g.elements()) {
    Word word = g.random_reduced_word(w, rng);
    EXPECT_EQ(g.to_permutation(w), oracle::word_permutation(5, word));
    EXPECT_EQ(g.from_permutation(g.to_permutation(w)), w);
  }
}

TEST(Weyl, LengthIsInversionCount) {
  WeylGroup g(DynkinDiagram::parse("A4"));
  for (const auto& w : g.elements()) {
    auto p = g.to_permutation(w);
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
    EXPECT_EQ(g.length(w), inv);
    EXPECT_EQ(static_cast<int>(g.reduced_word(w).size()), inv);
    EXPECT_TRUE(g.is_reduced(g.reduced_word(w)));
  }
}

TEST(Weyl, BruhatMatchesTableauCriterion) {
  for (const char* type : {"A2", "A3"}) {
    WeylGroup g(DynkinDiagram::parse(type));
    auto els = g.elements();
    int pairs = 0;
    for (const auto& v : els)
      for (const auto& w : els) {
        bool leq = g.bruhat_leq(v, w);
        EXPECT_EQ(leq, oracle::tableau_leq(g.to_permutation(v), g.to_permutation(w)));
        pairs += leq;
      }
    EXPECT_EQ(pairs, std::string(type) == "A2" ? 19 : 213);
  }
}

TEST(Weyl, ReducedWordCounts) {
  // Reduced words of the longest element: 2 in A2, 16 in A3, 768 in A4.
  EXPECT_EQ(WeylGroup(DynkinDiagram::parse("A2")).all_reduced_words(WeylGroup(DynkinDiagram::parse("A2")).longest()).size(), 2u);
  WeylGroup a3(DynkinDiagram::parse("A3"));
  EXPECT_EQ(a3.all_reduced_words(a3.longest()).size(), 16u);
  WeylGroup a4(DynkinDiagram::parse("A4"));
  auto words = a4.all_reduced_words(a4.longest());
  EXPECT_EQ(words.size(), 768u);
  for (const auto& w : words) EXPECT_EQ(a4.from_word(w), a4.longest());
}

TEST(Weyl, VSequence) {
  std::mt19937_64 rng(22);
  for (const char* type : {"A3", "D4"}) {
    WeylGroup g(DynkinDiagram::parse(type));
    auto els = g.elements();
    for (int t = 0; t < 200; ++t) {
      const auto& w = els[rng() % els.size()];
      const auto& v = els[rng() % els.size()];
      Word word = g.random_reduced_word(w, rng);
      if (!g.bruhat_leq(v, w)) {
        EXPECT_THROW(g.v_sequence(v, word), std::invalid_argument);
        continue;
      }
      auto seq = g.v_sequence(v, word);
      auto j = g.j_set(v, word);
      EXPECT_EQ(static_cast<int>(j.size()), g.length(w) - g.length(v));
      EXPECT_EQ(seq.back(), v);
      const int r = static_cast<int>(word.size());
      for (int k = 1; k <= r; ++k) {
        int i = word[r - k];
        // Each step stays or goes up by s_{i_k} on the left, and v_(k) stays a
        // length-additive right factor of v.
        EXPECT_TRUE(seq[k] == seq[k - 1] ||
                    (seq[k] == g.mul(g.simple(i), seq[k - 1]) && g.length(seq[k]) == g.length(seq[k - 1]) + 1));
        EXPECT_EQ(g.length(g.mul(v, g.inverse(seq[k]))) + g.length(seq[k]), g.length(v));
      }
    }
  }
}

TEST(Weyl, J72) {
  WeylGroup g(DynkinDiagram::parse("A5"));
  Word word = parse_word("s1 s3 s5 s2 s4 s1 s3 s5 s2 s4 s1 s3 s5 s4");
  EXPECT_EQ(g.j_set(g.parse("s1 s2 s1 s4 s5 s4"), word), (std::vector<int>{3, 7, 8, 10, 11, 12, 13, 14}));
}

TEST(Weyl, DeltaSetAndPropertyP) {
  WeylGroup g(DynkinDiagram::parse("A3"));
  for (const auto& w : g.elements())
    for (const auto& v : g.elements()) {
      if (!g.bruhat_leq(v, w)) continue;
      auto d = g.delta_set(v, w);
      // Root e_a - e_b (a < b) is inverted by a permutation p iff p(a) > p(b).
      auto pv = g.to_permutation(v), pw = g.to_permutation(w);
      int count = 0;
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) count += pw[a] > pw[b] && pv[a] < pv[b];
      EXPECT_EQ(static_cast<int>(d.size()), count);
      if (g.property_p(v, w)) EXPECT_EQ(static_cast<int>(d.size()), g.length(w) - g.length(v));
    }
}
