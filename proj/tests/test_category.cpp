#include <gtest/gtest.h>

#include "strata/category.hpp"
#include "strata/seed.hpp"
#include "support.hpp"

using namespace strata;

namespace {

const char* kV = "s1 s2 s1 s4 s5 s4";
const char* kWord = "s1 s3 s5 s2 s4 s1 s3 s5 s2 s4 s1 s3 s5 s4";

Stratum example() { return Stratum::make("A5", kV, kWord, kWord); }

std::vector<std::size_t> dims_of(const ClusterTilting& t, int label) {
  for (const auto& s : t.summands)
    if (s.label == label) return s.module.dims();
  return {};
}

}  // namespace

TEST(Category, ExampleSummands) {
  Stratum s = example();
  ClusterTilting t = initial_tilting(s);
  ASSERT_EQ(t.summands.size(), 8u);
  EXPECT_EQ(dims_of(t, 3), (std::vector<std::size_t>{0, 0, 1, 1, 0}));
  EXPECT_EQ(dims_of(t, 7), (std::vector<std::size_t>{0, 0, 1, 0, 0}));
  EXPECT_EQ(dims_of(t, 8), (std::vector<std::size_t>{1, 1, 2, 2, 1}));
  EXPECT_EQ(dims_of(t, 10), (std::vector<std::size_t>{1, 1, 2, 1, 0}));
  EXPECT_EQ(dims_of(t, 11), (std::vector<std::size_t>{0, 1, 2, 2, 1}));
  EXPECT_EQ(dims_of(t, 12), (std::vector<std::size_t>{1, 1, 1, 0, 0}));
  EXPECT_EQ(dims_of(t, 13), (std::vector<std::size_t>{1, 2, 3, 2, 1}));
  EXPECT_EQ(dims_of(t, 14), (std::vector<std::size_t>{0, 0, 1, 1, 1}));
  for (const auto& u : t.summands) EXPECT_EQ(u.frozen, u.label >= 10);
  // U_1, U_2, U_4 vanish; U_5, U_6, U_9 repeat U_3.
  EXPECT_TRUE(s.u_module(1).is_zero());
  EXPECT_TRUE(s.u_module(2).is_zero());
  EXPECT_TRUE(s.u_module(4).is_zero());
  for (int k : {5, 6, 9}) EXPECT_TRUE(is_isomorphic(s.u_module(k), s.u_module(3))) << k;
}

TEST(Category, ExampleSumIsRigidByCocycles) {
  ClusterTilting t = initial_tilting(example());
  Module sum = direct_sum(t.modules(), t.summands[0].module.quiver());
  EXPECT_EQ(oracle::ext1(sum, sum), 0);
}

TEST(Category, ExampleLambdaIsSkewAndMatchesHoms) {
  ClusterTilting t = initial_tilting(example());
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      EXPECT_EQ(t.lambda[a][b], -t.lambda[b][a]);
      EXPECT_EQ(t.lambda[a][b], static_cast<int>(hom_dim(t.summands[a].module, t.summands[b].module)) -
                                    static_cast<int>(hom_dim(t.summands[b].module, t.summands[a].module)));
    }
}

TEST(Category, GammaGivesDimensionOfV) {
  for (const char* type : {"A3", "D4"}) {
    auto alg = std::make_shared<const Preprojective>(DynkinDiagram::parse(type));
    WeylGroup g(alg->diagram());
    WeylElement w0 = g.longest();
    Stratum s(alg, g.identity(), w0, g.reduced_word(w0));
    for (int k = 1; k <= s.r(); ++k) {
      auto d = s.v_module(k).dims();
      auto gamma = s.gamma(k);
      EXPECT_EQ(std::vector<int>(d.begin(), d.end()), gamma) << type << " k=" << k;
    }
  }
}

TEST(Category, CountAndRigidityOverAllPairs) {
  for (const char* type : {"A2", "A3"}) {
    auto alg = std::make_shared<const Preprojective>(DynkinDiagram::parse(type));
    WeylGroup g(alg->diagram());
    for (const auto& w : g.elements())
      for (const auto& v : g.elements()) {
        if (!g.bruhat_leq(v, w)) continue;
        Stratum s(alg, v, w, g.reduced_word(w));
        ClusterTilting t = initial_tilting(s);
        ASSERT_EQ(static_cast<int>(t.summands.size()), g.length(w) - g.length(v));
        if (t.summands.empty()) continue;
        Module sum = direct_sum(t.modules(), alg->quiver());
        EXPECT_EQ(oracle::ext1(sum, sum), 0);
        for (std::size_t a = 0; a < t.summands.size(); ++a) {
          EXPECT_TRUE(is_indecomposable(t.summands[a].module));
          EXPECT_TRUE(s.contains(t.summands[a].module));
          for (std::size_t b = a + 1; b < t.summands.size(); ++b)
            EXPECT_FALSE(is_isomorphic(t.summands[a].module, t.summands[b].module));
        }
      }
  }
}

TEST(Category, RejectsBadInput) {
  EXPECT_THROW(Stratum::make("A3", "s1 s2", "s1"), NotBelow);
  EXPECT_THROW(Stratum::make("A3", "", "s1 s2", "s1 s1"), InvalidWord);
  EXPECT_THROW(Stratum::make("A3", "", "s1 s2", "s2 s1"), std::invalid_argument);
  EXPECT_THROW(Stratum::make("A3", "s1 s1", "s1"), InvalidWord);
}

TEST(Category, QuiverMutationRulesAgree) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> d(0, 2);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + t % 5;
    IntMatrix q(n, std::vector<int>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        int m = d(rng);
        (rng() % 2 ? q[a][b] : q[b][a]) = m;
      }
    std::size_t k = rng() % n;
    IntMatrix fz = mutate_quiver(q, k);
    EXPECT_EQ(fz, mutate_quiver_steps(q, k));
    EXPECT_EQ(exchange_matrix(fz), mutate_exchange_matrix(exchange_matrix(q), k));
    EXPECT_EQ(mutate_quiver(fz, k), q);
  }
}

TEST(Category, CategoricalMutationExchangePair) {
  Stratum s = example();
  ClusterTilting t = initial_tilting(s);
  const QuiverPtr& quiver = s.quiver();
  for (std::size_t k = 0; k < t.summands.size(); ++k) {
    if (t.summands[k].frozen) continue;
    ExchangeData data;
    ClusterTilting t1 = categorical_mutation(t, k, &data);
    EXPECT_EQ(oracle::ext1(data.old_module, data.new_module), 1);
    EXPECT_TRUE(is_indecomposable(data.new_module));
    Module sum = direct_sum(t1.modules(), quiver);
    EXPECT_EQ(oracle::ext1(sum, sum), 0);
    EXPECT_EQ(t1.quiver[k], mutate_quiver(t.quiver, k)[k]);
    ClusterTilting t2 = categorical_mutation(t1, k);
    EXPECT_TRUE(is_isomorphic(t2.summands[k].module, t.summands[k].module));
  }
}

TEST(Category, ProjectiveInjectivesOfRemarkExample) {
  Stratum s = Stratum::make("A3", "s2", "s1 s3 s2 s1 s3");
  const auto& alg = s.algebra();
  std::vector<Module> pieces;
  for (const auto& q : s.projective_injectives())
    for (auto& p : indecomposable_summands(q)) pieces.push_back(p);
  auto has = [&](const Module& m) {
    for (const auto& p : pieces)
      if (is_isomorphic(p, m)) return true;
    return false;
  };
  EXPECT_TRUE(has(alg.injective(0)));
  EXPECT_TRUE(has(alg.injective(2)));
  EXPECT_TRUE(has(Module::simple(alg.quiver(), 0)));
  EXPECT_TRUE(has(Module::simple(alg.quiver(), 2)));
  for (const auto& p : pieces)
    EXPECT_TRUE(is_isomorphic(p, alg.injective(0)) || is_isomorphic(p, alg.injective(2)) ||
                is_isomorphic(p, Module::simple(alg.quiver(), 0)) || is_isomorphic(p, Module::simple(alg.quiver(), 2)));
}

TEST(Category, DynkinD) {
  Stratum s = Stratum::make("D4", "s2", "s1 s2 s3 s4 s2");
  ClusterTilting t = initial_tilting(s);
  EXPECT_EQ(t.summands.size(), 4u);
  EXPECT_TRUE(t.rigid);
}
