#include <gtest/gtest.h>

#include "strata/prepro.hpp"
#include "support.hpp"

using namespace strata;

namespace {

// Random change of basis at every vertex.
Module twist(const Module& m, std::mt19937_64& rng) {
  std::vector<Matrix> g, ginv;
  for (int v = 0; v < m.vertex_count(); ++v) {
    Matrix a;
    std::optional<Matrix> inv;
    do {
      a = oracle::random_matrix(m.dim(v), m.dim(v), rng);
      inv = inverse(a);
    } while (!inv);
    g.push_back(a);
    ginv.push_back(*inv);
  }
  std::vector<Matrix> maps;
  const auto& arrows = m.quiver()->arrows();
  for (std::size_t a = 0; a < arrows.size(); ++a)
    maps.push_back(g[arrows[a].target] * m.map(static_cast<int>(a)) * ginv[arrows[a].source]);
  return Module(m.quiver(), m.dims(), maps);
}

// Submodules and quotients of injectives give a varied supply of modules.
std::vector<Module> module_zoo(const Preprojective& alg, std::mt19937_64& rng, int count) {
  std::vector<Module> out;
  for (int k = 0; k < count; ++k) {
    const Module& q = alg.injective(static_cast<int>(rng() % alg.rank()));
    std::vector<Matrix> vecs;
    for (int v = 0; v < q.vertex_count(); ++v) vecs.push_back(Matrix(q.dim(v), 0));
    int v = static_cast<int>(rng() % alg.rank());
    if (q.dim(v) > 0) vecs[v] = oracle::random_matrix(q.dim(v), 1, rng);
    Submodule s = generated_submodule(q, vecs);
    out.push_back(k % 2 ? restrict_to(q, s).module : quotient(q, s).module);
  }
  return out;
}

}  // namespace

TEST(Prepro, AlgebraDimension) {
  // dim = n h (h + 1) / 6 with h the Coxeter number.
  const std::vector<std::tuple<std::string, int, std::size_t>> cases = {
      {"A1", 2, 1}, {"A2", 3, 2}, {"A3", 4, 3}, {"A4", 5, 4}, {"A5", 6, 5}, {"D4", 6, 4}, {"D5", 8, 5}, {"E6", 12, 6}};
  for (const auto& [name, h, n] : cases) {
    Preprojective alg(DynkinDiagram::parse(name));
    EXPECT_EQ(alg.dimension(), n * h * (h + 1) / 6) << name;
  }
}

TEST(Prepro, ProjectivesAndInjectives) {
  for (const char* name : {"A2", "A3", "A4", "D4"}) {
    Preprojective alg(DynkinDiagram::parse(name));
    for (int i = 0; i < alg.rank(); ++i) {
      const Module& p = alg.projective(i);
      const Module& q = alg.injective(i);
      EXPECT_TRUE(p.satisfies_relations());
      EXPECT_TRUE(q.satisfies_relations());
      EXPECT_EQ(socle(q).total_dim(), 1u);
      EXPECT_EQ(socle(q).dims()[i], 1u);
      EXPECT_EQ(p.total_dim() - radical(p).total_dim(), 1u);
      EXPECT_TRUE(is_indecomposable(q));
      // Hom(P_i, M) = M_i.
      for (int j = 0; j < alg.rank(); ++j) EXPECT_EQ(hom_dim(p, alg.injective(j)), alg.injective(j).dim(i));
      EXPECT_TRUE(is_isomorphic(dual(p), q));
      EXPECT_TRUE(is_rigid(q));
    }
  }
  // Nakayama permutation in type A_n: P_i = Q_{n+1-i}.
  Preprojective a4(DynkinDiagram::parse("A4"));
  for (int i = 0; i < 4; ++i) EXPECT_TRUE(is_isomorphic(a4.projective(i), a4.injective(3 - i)));
}

TEST(Prepro, Ext1MatchesCocycleComputation) {
  std::mt19937_64 rng(31);
  for (const char* name : {"A2", "A3", "D4"}) {
    Preprojective alg(DynkinDiagram::parse(name));
    auto zoo = module_zoo(alg, rng, 10);
    for (int i = 0; i < alg.rank(); ++i) zoo.push_back(Module::simple(alg.quiver(), i));
    for (std::size_t a = 0; a < zoo.size(); ++a)
      for (std::size_t b = a; b < zoo.size(); b += 3)
        EXPECT_EQ(ext1_dim(zoo[a], zoo[b]), oracle::ext1(zoo[a], zoo[b])) << name << " " << zoo[a].dims_string() << " "
                                                                           << zoo[b].dims_string();
  }
}

TEST(Prepro, Ext1BetweenSimplesCountsArrows) {
  Preprojective alg(DynkinDiagram::parse("D4"));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int arrows = 0;
      for (const auto& a : alg.quiver()->arrows()) arrows += a.source == i && a.target == j;
      EXPECT_EQ(oracle::ext1(Module::simple(alg.quiver(), i), Module::simple(alg.quiver(), j)), arrows);
      EXPECT_EQ(ext1_dim(Module::simple(alg.quiver(), i), Module::simple(alg.quiver(), j)), arrows);
    }
}

TEST(Prepro, IsomorphismIsBasisInvariant) {
  std::mt19937_64 rng(32);
  Preprojective alg(DynkinDiagram::parse("A3"));
  auto zoo = module_zoo(alg, rng, 12);
  for (const auto& m : zoo) {
    EXPECT_TRUE(is_isomorphic(m, twist(m, rng)));
    EXPECT_EQ(hom_dim(m, m), hom_dim(twist(m, rng), m));
  }
  EXPECT_FALSE(is_isomorphic(alg.projective(0), alg.injective(0)));
  EXPECT_FALSE(is_isomorphic(Module::simple(alg.quiver(), 0), Module::simple(alg.quiver(), 1)));
}

TEST(Prepro, DecompositionRecoversSummands) {
  std::mt19937_64 rng(33);
  Preprojective alg(DynkinDiagram::parse("A3"));
  for (int t = 0; t < 15; ++t) {
    const Module& a = alg.injective(t % 3);
    Module b = Module::simple(alg.quiver(), (t / 3) % 3);
    Module c = alg.projective((t + 1) % 3);
    Module sum = twist(direct_sum({a, b, c, a}, alg.quiver()), rng);
    auto parts = decompose(sum);
    std::size_t total = 0;
    for (const auto& p : parts) {
      EXPECT_TRUE(is_indecomposable(p.module));
      total += p.multiplicity;
    }
    EXPECT_EQ(total, 4u);
    auto pieces = indecomposable_summands(sum);
    std::size_t dim = 0;
    for (const auto& p : pieces) dim += p.total_dim();
    EXPECT_EQ(dim, sum.total_dim());
  }
}

TEST(Prepro, ReflectionFunctors) {
  Preprojective alg(DynkinDiagram::parse("A3"));
  for (int i = 0; i < 3; ++i) {
    Module s = Module::simple(alg.quiver(), i);
    EXPECT_TRUE(apply_e(s, i).is_zero());
    EXPECT_TRUE(apply_e_dagger(s, i).is_zero());
    const Module& q = alg.injective_sum();
    EXPECT_TRUE(is_isomorphic(apply_e(apply_e(q, i), i), apply_e(q, i)));
    EXPECT_TRUE(is_rigid(apply_e(q, i)));
    EXPECT_TRUE(is_rigid(apply_e_dagger(q, i)));
  }
  // E_{w0}(sum Q) = 0 and E_e is the identity.
  WeylGroup g(alg.diagram());
  EXPECT_TRUE(apply_e_word(alg.injective_sum(), g.reduced_word(g.longest())).is_zero());
  EXPECT_TRUE(apply_e_dagger_word(alg.injective_sum(), g.reduced_word(g.longest())).is_zero());
}

TEST(Prepro, SocleSequenceOfInjective) {
  Preprojective alg(DynkinDiagram::parse("A3"));
  const Module& q = alg.injective(1);
  EXPECT_EQ(socle_sequence(q, {1}).total_dim(), 1u);
  EXPECT_EQ(socle_sequence(q, {}).total_dim(), 0u);
  Submodule full = socle_sequence(q, {1, 0, 2, 1});
  EXPECT_TRUE(same_submodule(full, whole_submodule(q)));
}
