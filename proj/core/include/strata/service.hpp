#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strata/serialize.hpp"

// Request handlers shared by the command line and the HTTP service. All
// state travels in the documents; every function here is pure.

namespace strata {

struct JobSpec {
  std::string type;
  std::string v, w;
  std::string word;  // empty: canonical reduced word of w
  std::optional<std::uint64_t> sampler_seed;
};

JobSpec jobspec_from_json(const json& j);
json jobspec_to_json(const JobSpec& spec);

// Initial seed document: seed fields plus spec, counts, tilting data,
// warnings and, with a sampler seed in type A, a sample point of O_{v,w}.
json seed_document(const JobSpec& spec);
// Applies mutations at the given vertex ids; other fields pass through.
json mutate_document(const json& seed_doc, const std::vector<int>& vertex_ids);

// Replays the history of a seed document categorically and compares quiver,
// frozen flags and lambda with the combinatorial seed.
struct CategoricalCheck {
  bool agrees = true;
  json report;
};
CategoricalCheck categorical_check(const json& seed_doc);

std::string dump_document(const json& doc);

struct HttpResponse {
  int status = 200;
  std::string body;
};

HttpResponse handle_seed(const std::string& body);
HttpResponse handle_mutate(const std::string& body);
HttpResponse handle_health();

}  // namespace strata
