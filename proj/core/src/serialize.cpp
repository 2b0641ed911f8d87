#include "strata/serialize.hpp"

#include <cctype>
#include <sstream>

namespace strata {

std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (!j.is_string()) throw FormatError("rational must be a \"p/q\" string");
  const std::string s = j.get<std::string>();
  std::size_t slash = s.find('/');
  auto is_int = [](const std::string& t) {
    std::size_t k = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (k >= t.size()) return false;
    for (; k < t.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(t[k]))) return false;
    return true;
  };
  if (slash == std::string::npos ? !is_int(s) : !is_int(s.substr(0, slash)) || !is_int(s.substr(slash + 1)))
    throw FormatError("malformed rational '" + s + "'");
  Rational q;
  try {
    q = Rational(s[0] == '+' ? s.substr(1) : s);
  } catch (const std::invalid_argument&) {
    throw FormatError("malformed rational '" + s + "'");
  }
  if (q.get_den() == 0) throw FormatError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("matrix must be an array of rows");
  if (j.empty()) return Matrix();
  if (!j[0].is_array()) throw FormatError("matrix rows must be arrays");
  Matrix m(j.size(), j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != m.cols()) throw FormatError("matrix rows have different lengths");
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = rational_from_json(j[i][c]);
  }
  return m;
}

json weyl_to_json(const WeylGroup& g, const WeylElement& w) {
  json out = {{"word", g.format(w)}};
  if (g.diagram().kind() == DynkinKind::A) out["permutation"] = g.to_permutation(w);
  return out;
}

WeylElement weyl_from_json(const WeylGroup& g, const json& j) {
  if (j.is_string()) return g.parse(j.get<std::string>());
  if (j.is_array()) return g.from_permutation(j.get<std::vector<int>>());
  if (j.is_object()) {
    if (j.contains("word")) return weyl_from_json(g, j.at("word"));
    if (j.contains("permutation")) return weyl_from_json(g, j.at("permutation"));
  }
  throw FormatError("Weyl group element must be a word string or a permutation");
}

json module_to_json(const Module& m) {
  json arrows = json::array();
  const auto& qa = m.quiver()->arrows();
  for (std::size_t a = 0; a < qa.size(); ++a)
    arrows.push_back(
        {{"from", qa[a].source + 1}, {"to", qa[a].target + 1}, {"star", qa[a].star}, {"matrix", matrix_to_json(m.map(a))}});
  return {{"dims", m.dims()}, {"arrows", arrows}};
}

Module module_from_json(const json& j, const QuiverPtr& quiver) {
  try {
    auto dims = j.at("dims").get<std::vector<std::size_t>>();
    if (static_cast<int>(dims.size()) != quiver->vertex_count()) throw FormatError("dims has the wrong length");
    const auto& qa = quiver->arrows();
    std::vector<Matrix> maps(qa.size());
    std::vector<bool> seen(qa.size(), false);
    for (const auto& ja : j.at("arrows")) {
      int from = ja.at("from").get<int>() - 1, to = ja.at("to").get<int>() - 1;
      bool star = ja.at("star").get<bool>();
      std::size_t a = 0;
      while (a < qa.size() && !(qa[a].source == from && qa[a].target == to && qa[a].star == star)) ++a;
      if (a == qa.size()) throw FormatError("arrow " + std::to_string(from + 1) + "->" + std::to_string(to + 1) + " not in quiver");
      Matrix mat = matrix_from_json(ja.at("matrix"));
      if (mat.rows() == 0 || mat.cols() == 0) mat = Matrix(dims[to], dims[from]);
      maps[a] = std::move(mat);
      seen[a] = true;
    }
    for (std::size_t a = 0; a < qa.size(); ++a)
      if (!seen[a]) maps[a] = Matrix(dims[qa[a].target], dims[qa[a].source]);
    Module m(quiver, dims, maps);
    if (!m.satisfies_relations()) throw FormatError("module violates the preprojective relations");
    return m;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed module: ") + e.what());
  }
}

json tilting_to_json(const ClusterTilting& t) {
  json summands = json::array();
  for (const auto& s : t.summands) summands.push_back({{"label", s.label}, {"dims", s.module.dims()}, {"projective_injective", s.frozen}});
  return {{"summands", summands}, {"quiver", t.quiver}, {"lambda", t.lambda}, {"rigid", t.rigid}, {"log", t.log}};
}

namespace {

std::string dot_graph(const std::vector<std::string>& names, const std::vector<bool>& frozen, const IntMatrix& q,
                      const std::vector<std::string>& tooltips) {
  std::ostringstream out;
  out << "digraph quiver {\n";
  for (std::size_t i = 0; i < names.size(); ++i) {
    out << "  \"" << names[i] << "\" [shape=" << (frozen[i] ? "box" : "ellipse");
    if (!tooltips.empty() && !tooltips[i].empty()) out << ", tooltip=\"" << tooltips[i] << "\"";
    out << "];\n";
  }
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      for (int m = 0; m < q[i][j]; ++m) out << "  \"" << names[i] << "\" -> \"" << names[j] << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

std::string tilting_to_dot(const ClusterTilting& t) {
  std::vector<std::string> names, dims;
  std::vector<bool> frozen;
  for (const auto& s : t.summands) {
    names.push_back("U" + std::to_string(s.label));
    frozen.push_back(s.frozen);
    dims.push_back(s.module.dims_string());
  }
  return dot_graph(names, frozen, t.quiver, dims);
}

json seed_to_json(const Seed& s) {
  json vertices = json::array(), arrows = json::array(), initial = json::array();
  for (std::size_t i = 0; i < s.size(); ++i)
    vertices.push_back({{"id", s.ids[i]}, {"frozen", static_cast<bool>(s.frozen[i])}, {"label", s.labels[i]}});
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (s.quiver[i][j] > 0) arrows.push_back({s.ids[i], s.ids[j], s.quiver[i][j]});
  for (std::size_t i = 0; i < s.names.size(); ++i) initial.push_back({{"name", s.names[i]}, {"label", s.initial_labels[i]}});
  json out = {{"vertices", vertices},   {"arrows", arrows},     {"variables", s.variable_strings()},
              {"initial", initial},     {"history", s.history}};
  out["lambda"] = s.lambda ? json(*s.lambda) : json(nullptr);
  return out;
}

Seed seed_from_json(const json& j) {
  try {
    const auto& jv = j.at("vertices");
    if (!jv.is_array()) throw FormatError("vertices must be an array");
    std::vector<int> ids;
    std::vector<bool> frozen;
    std::vector<std::string> labels;
    for (const auto& v : jv) {
      ids.push_back(v.at("id").get<int>());
      frozen.push_back(v.at("frozen").get<bool>());
      labels.push_back(v.value("label", std::string()));
    }
    const std::size_t n = ids.size();
    auto index_of = [&](int id) {
      for (std::size_t i = 0; i < n; ++i)
        if (ids[i] == id) return i;
      throw FormatError("arrow refers to unknown vertex " + std::to_string(id));
    };
    IntMatrix q(n, std::vector<int>(n, 0));
    for (const auto& a : j.at("arrows")) {
      if (!a.is_array() || a.size() != 3) throw FormatError("arrows must be [from, to, multiplicity] triples");
      int m = a[2].get<int>();
      if (m <= 0) throw FormatError("arrow multiplicity must be positive");
      q[index_of(a[0].get<int>())][index_of(a[1].get<int>())] += m;
    }
    std::vector<std::string> names, initial_labels;
    if (j.contains("initial")) {
      for (const auto& x : j.at("initial")) {
        names.push_back(x.at("name").get<std::string>());
        initial_labels.push_back(x.value("label", std::string()));
      }
    } else {
      for (int id : ids) names.push_back("x" + std::to_string(id));
      initial_labels = labels;
    }
    if (names.size() != n) throw FormatError("one initial variable per vertex expected");
    std::optional<IntMatrix> lambda;
    if (j.contains("lambda") && !j.at("lambda").is_null()) lambda = j.at("lambda").get<IntMatrix>();
    Seed s = make_seed(ids, frozen, q, names, initial_labels, lambda);
    s.labels = labels;
    if (j.contains("variables")) {
      const auto& jvars = j.at("variables");
      if (!jvars.is_array() || jvars.size() != n) throw FormatError("one variable per vertex expected");
      for (std::size_t i = 0; i < n; ++i) {
        s.variables[i] = parse_laurent(jvars[i].get<std::string>(), names);
        if (s.variables[i].is_zero()) throw FormatError("cluster variable is zero");
      }
    }
    if (j.contains("history")) s.history = j.at("history").get<std::vector<int>>();
    return s;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed seed: ") + e.what());
  } catch (const LaurentParseError& e) {
    throw FormatError(std::string("malformed seed variable: ") + e.what());
  }
}

std::string seed_to_dot(const Seed& s) {
  std::vector<std::string> names;
  for (int id : s.ids) names.push_back(std::to_string(id));
  std::vector<std::string> tips;
  auto vars = s.variable_strings();
  for (std::size_t i = 0; i < s.size(); ++i) tips.push_back(s.labels[i].empty() ? vars[i] : s.labels[i]);
  return dot_graph(names, s.frozen, s.quiver, tips);
}

}  // namespace strata
