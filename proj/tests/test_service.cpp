#include <gtest/gtest.h>

#include <thread>

#include "strata/minors.hpp"
#include "strata/service.hpp"

using namespace strata;

namespace {

const char* kWord = "s1 s3 s5 s2 s4 s1 s3 s5 s2 s4 s1 s3 s5 s4";

json example_spec() { return {{"type", "A5"}, {"v", "s1 s2 s1 s4 s5 s4"}, {"w", kWord}, {"word", kWord}}; }

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = haystack.find(needle); p != std::string::npos; p = haystack.find(needle, p + 1)) ++n;
  return n;
}

std::string kind_of(const HttpResponse& r) { return json::parse(r.body).at("kind").get<std::string>(); }

}  // namespace

TEST(Service, Health) {
  HttpResponse r = handle_health();
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(json::parse(r.body), json({{"status", "ok"}}));
}

TEST(Service, SeedOfTheExample) {
  HttpResponse r = handle_seed(example_spec().dump());
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(count(r.body, "\"frozen\": true"), 5u);
  json doc = json::parse(r.body);
  EXPECT_EQ(doc.at("vertices").size(), 8u);
  EXPECT_EQ(doc.at("counts").at("mutable").get<int>(), 3);
  EXPECT_EQ(doc.at("counts").at("dimension").get<int>(), 8);
  EXPECT_EQ(doc.at("spec").at("word").get<std::string>(), kWord);
}

TEST(Service, SmallExamples) {
  json torus = json::parse(handle_seed(R"({"type":"A3","v":"s2","w":"s1 s2 s3"})").body);
  EXPECT_EQ(torus.at("vertices").size(), 2u);
  for (const auto& v : torus.at("vertices")) EXPECT_TRUE(v.at("frozen").get<bool>());
  json trivial = json::parse(handle_seed(R"({"type":"A2","v":"","w":"s1"})").body);
  ASSERT_EQ(trivial.at("vertices").size(), 1u);
  EXPECT_TRUE(trivial.at("vertices")[0].at("frozen").get<bool>());
  EXPECT_EQ(trivial.at("vertices")[0].at("label").get<std::string>(), "Delta_{1,2}");
}

TEST(Service, TypeDSeedCarriesAWarning) {
  HttpResponse r = handle_seed(R"({"type":"D4","v":"","w":"s1 s2 s3"})");
  ASSERT_EQ(r.status, 200);
  json doc = json::parse(r.body);
  EXPECT_EQ(doc.at("warnings").size(), 1u);
  for (const auto& v : doc.at("vertices")) EXPECT_EQ(v.at("label").get<std::string>(), "");
}

TEST(Service, ErrorStatuses) {
  HttpResponse below = handle_seed(R"({"type":"A3","v":"s1 s2","w":"s1"})");
  EXPECT_EQ(below.status, 422);
  EXPECT_EQ(kind_of(below), "not_below");
  for (const char* body : {"{", "[]", R"({"type":"A3","v":""})", R"({"type":"B3","v":"","w":"s1"})",
                           R"({"type":"A3","v":"","w":"s1 s1"})", R"({"type":"A3","v":"","w":"s9"})",
                           R"({"type":"A3","v":"","w":"s1","seed_rng":-1})", R"({"type":"A3","v":3,"w":"s1"})"}) {
    HttpResponse r = handle_seed(body);
    EXPECT_EQ(r.status, 400) << body;
    EXPECT_EQ(kind_of(r), "malformed") << body;
    EXPECT_FALSE(json::parse(r.body).at("error").get<std::string>().empty());
  }
  json doc = json::parse(handle_seed(example_spec().dump()).body);
  HttpResponse frozen = handle_mutate(json({{"seed", doc}, {"vertex", 10}}).dump());
  EXPECT_EQ(frozen.status, 400);
  EXPECT_EQ(kind_of(frozen), "frozen_vertex");
  HttpResponse unknown = handle_mutate(json({{"seed", doc}, {"vertex", 99}}).dump());
  EXPECT_EQ(unknown.status, 400);
  EXPECT_EQ(kind_of(unknown), "malformed");
  HttpResponse no_vertex = handle_mutate(json({{"seed", doc}}).dump());
  EXPECT_EQ(no_vertex.status, 400);
  json tampered = doc;
  tampered["variables"][0] = "x3 + x7";
  HttpResponse inexact = handle_mutate(json({{"seed", tampered}, {"vertex", 3}}).dump());
  EXPECT_EQ(inexact.status, 400);
  EXPECT_EQ(kind_of(inexact), "inexact_division");
}

TEST(Service, MutateRoundTrip) {
  std::string original = handle_seed(example_spec().dump()).body;
  json doc = json::parse(original);
  for (int k : {3, 7, 8}) {
    HttpResponse once = handle_mutate(json({{"seed", doc}, {"vertex", k}}).dump());
    ASSERT_EQ(once.status, 200);
    EXPECT_NE(once.body, original);
    HttpResponse twice = handle_mutate(json({{"seed", json::parse(once.body)}, {"vertex", k}}).dump());
    ASSERT_EQ(twice.status, 200);
    EXPECT_EQ(twice.body, original);
  }
  HttpResponse seq = handle_mutate(json({{"seed", doc}, {"vertex", {3, 7, 7, 3}}}).dump());
  EXPECT_EQ(seq.body, original);
  HttpResponse empty = handle_mutate(json({{"seed", doc}, {"vertex", json::array()}}).dump());
  EXPECT_EQ(empty.body, original);
}

TEST(Service, ReachesTheWholeClass) {
  json doc = json::parse(handle_seed(example_spec().dump()).body);
  json m = mutate_document(doc, {3});
  EXPECT_EQ(m.at("variables")[0].get<std::string>(), "(x7*x8 + x10*x14)/x3");
  EXPECT_EQ(m.at("history"), json({3}));
}

TEST(Service, SamplerIsDeterministicAndConsistent) {
  json spec = example_spec();
  spec["seed_rng"] = 17;
  HttpResponse a = handle_seed(spec.dump()), b = handle_seed(spec.dump());
  ASSERT_EQ(a.status, 200);
  EXPECT_EQ(a.body, b.body);
  json doc = json::parse(a.body);
  Matrix x = matrix_from_json(doc.at("sample").at("point"));
  Stratum s = Stratum::make("A5", "s1 s2 s1 s4 s5 s4", kWord, kWord);
  EXPECT_TRUE(in_O(s.group(), s.v(), s.w(), x));
  for (const auto& [j, val] : initial_cluster_values(s, x))
    EXPECT_EQ(doc.at("sample").at("values").at("x" + std::to_string(j)).get<std::string>(), rational_to_string(val));
  spec["seed_rng"] = 18;
  EXPECT_NE(handle_seed(spec.dump()).body, a.body);
}

TEST(Service, ConcurrentRequestsAreIndependent) {
  const std::string expected = handle_seed(example_spec().dump()).body;
  std::vector<std::string> got(8);
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < got.size(); ++i)
    pool.emplace_back([&, i] { got[i] = handle_seed(example_spec().dump()).body; });
  for (auto& t : pool) t.join();
  for (const auto& g : got) EXPECT_EQ(g, expected);
}

TEST(Service, CategoricalReplayAgrees) {
  json doc = seed_document(jobspec_from_json(example_spec()));
  std::mt19937_64 rng(101);
  const std::vector<int> mutable_ids = {3, 7, 8};
  for (int t = 0; t < 6; ++t) {
    doc = mutate_document(doc, {mutable_ids[rng() % 3]});
    CategoricalCheck c = categorical_check(doc);
    EXPECT_TRUE(c.agrees) << c.report.dump();
  }
}
