// strata: command line front end to the seed pipeline and the HTTP service.

#include <CLI11.hpp>
#include <httplib.h>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "strata/minors.hpp"
#include "strata/service.hpp"
#include "strata/verify.hpp"

using namespace strata;

namespace {

enum Exit { ok = 0, failed = 1, bad_input = 2, not_below = 3 };

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void emit(const json& doc, const std::string& format) {
  if (format == "dot")
    std::cout << seed_to_dot(seed_from_json(doc));
  else
    std::cout << dump_document(doc);
}

int run_verify(const std::vector<std::string>& requested) {
  std::vector<std::string> names = requested;
  if (names.empty() || (names.size() == 1 && names[0] == "all")) names = suite_names();
  bool all = true;
  for (const auto& name : names) {
    SuiteReport r = run_suite(name);
    for (const auto& c : r.checks) {
      std::cout << (c.pass ? "PASS " : "FAIL ") << std::left << std::setw(6) << (c.criterion.empty() ? "-" : c.criterion)
                << c.name;
      if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
      std::cout << "\n";
    }
    std::cout << "suite " << name << ": " << (r.passed() ? "passed" : "FAILED") << " in " << std::fixed
              << std::setprecision(2) << r.seconds << " s\n";
    std::cout.unsetf(std::ios::fixed);
    all = all && r.passed();
  }
  return all ? ok : failed;
}

int run_eval(const JobSpec& spec, const std::string& matrix_path) {
  Stratum s = Stratum::make(spec.type, spec.v, spec.w, spec.word);
  const WeylGroup& g = s.group();
  Matrix x = matrix_from_json(json::parse(read_input(matrix_path)));
  const std::size_t n = static_cast<std::size_t>(g.rank()) + 1;
  if (x.rows() != n || x.cols() != n || !is_unitriangular(x))
    throw std::invalid_argument("expected an upper unitriangular " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  json out = {{"in_O", in_O(g, s.v(), s.w(), x)}};
  json values = json::object();
  for (const auto& [j, val] : initial_cluster_values(s, x)) values["x" + std::to_string(j)] = rational_to_string(val);
  out["values"] = values;
  if (out["in_O"].get<bool>()) out["zeta"] = matrix_to_json(zeta(g, s.v(), s.w(), x));
  std::cout << dump_document(out);
  return ok;
}

int serve(const std::string& host, int port) {
  httplib::Server server;
  auto reply = [](httplib::Response& res, const HttpResponse& r) {
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  server.Post("/api/seed", [&](const httplib::Request& req, httplib::Response& res) { reply(res, handle_seed(req.body)); });
  server.Post("/api/mutate",
              [&](const httplib::Request& req, httplib::Response& res) { reply(res, handle_mutate(req.body)); });
  server.Get("/api/health", [&](const httplib::Request&, httplib::Response& res) { reply(res, handle_health()); });
  std::cerr << "listening on " << host << ":" << port << "\n";
  if (!server.listen(host, port)) {
    std::cerr << "error: cannot listen on " << host << ":" << port << "\n";
    return failed;
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cluster structures on open Richardson strata"};
  app.require_subcommand(1);

  JobSpec spec;
  std::uint64_t rng_seed = 0;
  std::string format = "json";
  auto add_spec = [&](CLI::App* cmd) {
    cmd->add_option("-t,--type", spec.type, "Dynkin type, e.g. A5")->required();
    cmd->add_option("-v", spec.v, "reduced word of v, e.g. \"s1 s2\" (empty: identity)");
    cmd->add_option("-w", spec.w, "reduced word of w")->required();
    cmd->add_option("-i", spec.word, "reduced word of w used for the seed (default: canonical)");
  };

  auto* seed_cmd = app.add_subcommand("seed", "initial seed of C_{v,w}");
  add_spec(seed_cmd);
  auto* rng_opt = seed_cmd->add_option("--seed-rng", rng_seed, "sampler seed: attach a sample point and its minors");
  seed_cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "dot"}));

  std::string seed_file;
  std::vector<int> vertices;
  bool categorical = false;
  auto* mutate_cmd = app.add_subcommand("mutate", "mutate a seed document along a vertex sequence");
  mutate_cmd->add_option("seed", seed_file, "seed JSON file, - for stdin")->required();
  mutate_cmd->add_option("vertices", vertices, "vertex ids, applied left to right");
  mutate_cmd->add_flag("--categorical", categorical, "replay the history categorically and require agreement");
  mutate_cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "dot"}));

  std::vector<std::string> suites;
  auto* verify_cmd = app.add_subcommand("verify", "run golden and property suites");
  verify_cmd->add_option("suites", suites, "suite names or all")->check(CLI::IsMember([] {
    auto names = suite_names();
    names.push_back("all");
    return names;
  }()));

  std::string matrix_path;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate zeta and the initial minors at a point of N");
  add_spec(eval_cmd);
  eval_cmd->add_option("--matrix", matrix_path, "JSON file of \"p/q\" rows, - for stdin")->required();

  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serve_cmd = app.add_subcommand("serve", "HTTP/JSON service");
  serve_cmd->add_option("--host", host, "bind address");
  serve_cmd->add_option("-p,--port", port, "port")->check(CLI::Range(1, 65535));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*seed_cmd) {
      if (*rng_opt) spec.sampler_seed = rng_seed;
      json doc = seed_document(spec);
      for (const auto& w : doc.at("warnings")) std::cerr << "warning: " << w.get<std::string>() << "\n";
      emit(doc, format);
      return ok;
    }
    if (*mutate_cmd) {
      json doc = mutate_document(json::parse(read_input(seed_file)), vertices);
      if (categorical) {
        CategoricalCheck check = categorical_check(doc);
        if (!check.agrees) {
          std::cerr << "error: categorical mutation disagrees with the seed\n" << check.report.dump(2) << "\n";
          return failed;
        }
      }
      emit(doc, format);
      return ok;
    }
    if (*verify_cmd) return run_verify(suites);
    if (*eval_cmd) return run_eval(spec, matrix_path);
    if (*serve_cmd) return serve(host, port);
  } catch (const NotBelow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return not_below;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  }
  return ok;
}
