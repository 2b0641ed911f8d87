#include "strata/service.hpp"

#include <random>

#include "strata/minors.hpp"

namespace strata {

JobSpec jobspec_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("job spec must be a JSON object");
  auto text = [&](const char* key, bool required) {
    if (!j.contains(key)) {
      if (required) throw FormatError(std::string("job spec is missing '") + key + "'");
      return std::string();
    }
    if (!j.at(key).is_string()) throw FormatError(std::string("'") + key + "' must be a string");
    return j.at(key).get<std::string>();
  };
  JobSpec s;
  s.type = text("type", true);
  s.v = text("v", true);
  s.w = text("w", true);
  s.word = text("word", false);
  if (j.contains("seed_rng") && !j.at("seed_rng").is_null()) {
    if (!j.at("seed_rng").is_number_unsigned()) throw FormatError("'seed_rng' must be a nonnegative integer");
    s.sampler_seed = j.at("seed_rng").get<std::uint64_t>();
  }
  return s;
}

json jobspec_to_json(const JobSpec& spec) {
  json j = {{"type", spec.type}, {"v", spec.v}, {"w", spec.w}, {"word", spec.word}};
  if (spec.sampler_seed) j["seed_rng"] = *spec.sampler_seed;
  return j;
}

json seed_document(const JobSpec& spec) {
  Stratum s = Stratum::make(spec.type, spec.v, spec.w, spec.word);
  const WeylGroup& g = s.group();
  ClusterTilting t = initial_tilting(s);
  Seed seed = initial_seed(s, t);
  json doc = seed_to_json(seed);
  doc["spec"] = {{"type", g.diagram().name()}, {"v", g.format(s.v())}, {"w", g.format(s.w())}, {"word", format_word(s.word())}};
  const int lv = g.length(s.v()), lw = g.length(s.w());
  doc["counts"] = {{"cluster_size", seed.size()},
                   {"frozen", seed.size() - seed.mutable_count()},
                   {"mutable", seed.mutable_count()},
                   {"length_v", lv},
                   {"length_w", lw},
                   {"dimension", lw - lv}};
  doc["tilting"] = tilting_to_json(t);
  json warnings = json::array();
  const bool type_a = g.diagram().kind() == DynkinKind::A;
  if (!type_a) warnings.push_back("minor labels and sampling are only available in type A");
  if (spec.sampler_seed && type_a) {
    std::mt19937_64 rng(*spec.sampler_seed);
    Matrix x;
    do x = random_unitriangular(g.rank() + 1, rng);
    while (!in_O(g, s.v(), s.w(), x));
    json values = json::object();
    for (const auto& [j, val] : initial_cluster_values(s, x)) values["x" + std::to_string(j)] = rational_to_string(val);
    doc["sample"] = {{"seed_rng", *spec.sampler_seed}, {"point", matrix_to_json(x)}, {"values", values}};
  }
  doc["warnings"] = warnings;
  return doc;
}

json mutate_document(const json& seed_doc, const std::vector<int>& vertex_ids) {
  Seed seed = seed_from_json(seed_doc);
  for (int id : vertex_ids) seed = mutate(seed, vertex_index(seed, id));
  json out = seed_doc, fresh = seed_to_json(seed);
  for (auto& [key, value] : fresh.items()) out[key] = value;
  return out;
}

CategoricalCheck categorical_check(const json& seed_doc) {
  CategoricalCheck out;
  if (!seed_doc.contains("spec")) throw FormatError("categorical check needs the 'spec' of the seed document");
  const json& spec = seed_doc.at("spec");
  Stratum s = Stratum::make(spec.at("type").get<std::string>(), spec.at("v").get<std::string>(),
                            spec.at("w").get<std::string>(), spec.value("word", std::string()));
  Seed seed = seed_from_json(seed_doc);
  ClusterTilting t = initial_tilting(s);
  if (t.summands.size() != seed.size()) throw FormatError("seed does not match its spec");
  json steps = json::array();
  for (int id : seed.history) {
    std::size_t k = vertex_index(seed, id);
    ExchangeData data;
    t = categorical_mutation(t, k, &data);
    bool ok = t.rigid && data.approximation_minimal && data.second_sequence_ok && data.ext1_exchange == 1 &&
              data.quiver_matches_fz;
    out.agrees = out.agrees && ok;
    steps.push_back({{"vertex", id},
                     {"old_dims", data.old_module.dims()},
                     {"new_dims", data.new_module.dims()},
                     {"ext1", data.ext1_exchange},
                     {"rigid", t.rigid},
                     {"minimal", data.approximation_minimal},
                     {"fz_quiver", data.quiver_matches_fz}});
  }
  // Arrows between frozen vertices carry no exchange information and are not mutated.
  bool quiver_ok = true;
  for (std::size_t a = 0; a < seed.size(); ++a)
    for (std::size_t b = 0; b < seed.size(); ++b)
      if (!(seed.frozen[a] && seed.frozen[b])) quiver_ok = quiver_ok && t.quiver[a][b] == seed.quiver[a][b];
  bool lambda_ok = !seed.lambda || t.lambda == *seed.lambda;
  bool frozen_ok = true;
  for (std::size_t i = 0; i < seed.size(); ++i) frozen_ok = frozen_ok && t.summands[i].frozen == seed.frozen[i];
  out.agrees = out.agrees && quiver_ok && lambda_ok && frozen_ok;
  json modules = json::array();
  for (const auto& u : t.summands) modules.push_back(u.module.dims());
  out.report = {{"agrees", out.agrees}, {"quiver", quiver_ok}, {"lambda", lambda_ok},
                {"frozen", frozen_ok},  {"steps", steps},      {"modules", modules}};
  return out;
}

std::string dump_document(const json& doc) { return doc.dump(2) + "\n"; }

namespace {

HttpResponse error_response(int status, const std::string& kind, const std::string& message) {
  return {status, dump_document({{"error", message}, {"kind", kind}})};
}

template <class F>
HttpResponse guarded(F&& f) {
  try {
    return {200, dump_document(f())};
  } catch (const NotBelow& e) {
    return error_response(422, "not_below", e.what());
  } catch (const json::exception& e) {
    return error_response(400, "malformed", e.what());
  } catch (const InexactDivision& e) {
    return error_response(400, "inexact_division", e.what());
  } catch (const FrozenVertex& e) {
    return error_response(400, "frozen_vertex", e.what());
  } catch (const std::invalid_argument& e) {
    return error_response(400, "malformed", e.what());
  } catch (const std::out_of_range& e) {
    return error_response(400, "malformed", e.what());
  } catch (const std::exception& e) {
    return error_response(500, "internal", e.what());
  }
}

}  // namespace

HttpResponse handle_seed(const std::string& body) {
  return guarded([&] { return seed_document(jobspec_from_json(json::parse(body))); });
}

HttpResponse handle_mutate(const std::string& body) {
  return guarded([&] {
    json req = json::parse(body);
    if (!req.is_object() || !req.contains("seed") || !req.contains("vertex"))
      throw FormatError("mutate request needs 'seed' and 'vertex'");
    const json& v = req.at("vertex");
    std::vector<int> ids;
    if (v.is_array())
      ids = v.get<std::vector<int>>();
    else if (v.is_number_integer())
      ids.push_back(v.get<int>());
    else
      throw FormatError("'vertex' must be a vertex id or a list of ids");
    return mutate_document(req.at("seed"), ids);
  });
}

HttpResponse handle_health() { return {200, dump_document({{"status", "ok"}})}; }

}  // namespace strata
