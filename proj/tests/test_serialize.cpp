#include <gtest/gtest.h>

#include "strata/serialize.hpp"
#include "support.hpp"

using namespace strata;

namespace {

const char* kWord = "s1 s3 s5 s2 s4 s1 s3 s5 s2 s4 s1 s3 s5 s4";

Stratum example() { return Stratum::make("A5", "s1 s2 s1 s4 s5 s4", kWord, kWord); }

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = haystack.find(needle); p != std::string::npos; p = haystack.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST(Serialize, Rationals) {
  EXPECT_EQ(rational_to_string(Rational(-3, 6)), "-1/2");
  EXPECT_EQ(rational_to_string(Rational(4)), "4");
  EXPECT_EQ(rational_from_json("6/4"), Rational(3, 2));
  EXPECT_EQ(rational_from_json("+7"), Rational(7));
  EXPECT_EQ(rational_from_json(json(-5)), Rational(-5));
  for (const char* bad : {"1/0", "abc", "1/", "/2", "1.5", "", "1/-"}) EXPECT_THROW(rational_from_json(bad), FormatError) << bad;
  EXPECT_THROW(rational_from_json(json(1.5)), FormatError);
}

TEST(Serialize, MatrixRoundTrip) {
  std::mt19937_64 rng(91);
  for (int t = 0; t < 30; ++t) {
    Matrix m = oracle::random_matrix(1 + t % 4, 1 + t % 3, rng);
    EXPECT_EQ(matrix_from_json(matrix_to_json(m)), m);
    EXPECT_EQ(matrix_from_json(json::parse(matrix_to_json(m).dump())), m);
  }
  EXPECT_THROW(matrix_from_json(json::parse(R"([["1","2"],["3"]])")), FormatError);
  EXPECT_THROW(matrix_from_json(json::parse(R"({"a": 1})")), FormatError);
}

TEST(Serialize, WeylElements) {
  WeylGroup g(DynkinDiagram::parse("A3"));
  for (const auto& w : g.elements()) {
    json j = weyl_to_json(g, w);
    EXPECT_EQ(weyl_from_json(g, j), w);
    EXPECT_EQ(weyl_from_json(g, j.at("permutation")), w);
    EXPECT_EQ(weyl_from_json(g, j.at("word")), w);
  }
  EXPECT_THROW(weyl_from_json(g, json(3)), FormatError);
}

TEST(Serialize, ModuleRoundTrip) {
  Stratum s = example();
  ClusterTilting t = initial_tilting(s);
  for (const auto& u : t.summands) {
    json j = module_to_json(u.module);
    Module back = module_from_json(json::parse(j.dump()), s.quiver());
    EXPECT_EQ(back.dims(), u.module.dims());
    EXPECT_EQ(back.maps(), u.module.maps());
  }
  // A module violating the relations: both arrows of A2 nonzero on (1,1).
  Preprojective a2(DynkinDiagram::parse("A2"));
  json bad = {{"dims", {1, 1}},
              {"arrows",
               {{{"from", 1}, {"to", 2}, {"star", false}, {"matrix", {{"1"}}}},
                {{"from", 2}, {"to", 1}, {"star", true}, {"matrix", {{"1"}}}}}}};
  EXPECT_THROW(module_from_json(bad, a2.quiver()), FormatError);
  EXPECT_THROW(module_from_json(json{{"dims", {1}}}, a2.quiver()), FormatError);
}

TEST(Serialize, SeedRoundTrip) {
  Stratum s = example();
  Seed seed = initial_seed(s, initial_tilting(s));
  std::mt19937_64 rng(92);
  for (int t = 0; t < 12; ++t) {
    json j = seed_to_json(seed);
    Seed back = seed_from_json(json::parse(j.dump(2)));
    EXPECT_EQ(back.ids, seed.ids);
    EXPECT_EQ(back.frozen, seed.frozen);
    EXPECT_EQ(back.quiver, seed.quiver);
    EXPECT_EQ(back.variables, seed.variables);
    EXPECT_EQ(back.labels, seed.labels);
    EXPECT_EQ(back.lambda, seed.lambda);
    EXPECT_EQ(back.history, seed.history);
    EXPECT_EQ(seed_to_json(back), j);
    std::size_t k;
    do k = rng() % seed.size();
    while (seed.frozen[k]);
    seed = mutate(seed, k);
  }
}

TEST(Serialize, SeedRejectsMalformedDocuments) {
  Stratum s = example();
  json j = seed_to_json(initial_seed(s, initial_tilting(s)));
  json missing = j;
  missing.erase("vertices");
  EXPECT_THROW(seed_from_json(missing), FormatError);
  json bad_arrow = j;
  bad_arrow["arrows"].push_back({3, 99, 1});
  EXPECT_THROW(seed_from_json(bad_arrow), FormatError);
  json bad_var = j;
  bad_var["variables"][0] = "x3 +";
  EXPECT_THROW(seed_from_json(bad_var), FormatError);
  json two_cycle = j;
  two_cycle["arrows"].push_back({10, 3, 1});
  two_cycle["arrows"].push_back({3, 10, 1});
  EXPECT_THROW(seed_from_json(two_cycle), std::invalid_argument);
}

TEST(Serialize, DotOutput) {
  Stratum s = example();
  ClusterTilting t = initial_tilting(s);
  std::string dot = tilting_to_dot(t);
  EXPECT_EQ(count(dot, "shape=box"), 5u);
  EXPECT_EQ(count(dot, "->"), 13u);
  std::string sdot = seed_to_dot(initial_seed(s, t));
  EXPECT_EQ(count(sdot, "shape=box"), 5u);
  EXPECT_EQ(sdot.rfind("digraph", 0), 0u);
}

TEST(Serialize, TiltingDocument) {
  json j = tilting_to_json(initial_tilting(example()));
  EXPECT_EQ(j.at("summands").size(), 8u);
  EXPECT_TRUE(j.at("rigid").get<bool>());
  EXPECT_EQ(j.at("lambda").size(), 8u);
}
