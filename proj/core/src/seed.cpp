#include "strata/seed.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

#include "strata/minors.hpp"

namespace strata {

std::vector<std::string> Seed::variable_strings() const {
  std::vector<std::string> out;
  for (const auto& v : variables) out.push_back(v.to_string(names));
  return out;
}

std::size_t Seed::mutable_count() const { return static_cast<std::size_t>(std::count(frozen.begin(), frozen.end(), false)); }

namespace {

void check_square(const IntMatrix& m, std::size_t n, const char* what) {
  if (m.size() != n) throw std::invalid_argument(std::string(what) + " has the wrong size");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument(std::string(what) + " is not square");
}

}  // namespace

Seed make_seed(std::vector<int> ids, std::vector<bool> frozen, IntMatrix quiver, std::vector<std::string> names,
               std::vector<std::string> labels, std::optional<IntMatrix> lambda) {
  const std::size_t n = ids.size();
  if (frozen.size() != n || names.size() != n) throw std::invalid_argument("seed fields have inconsistent sizes");
  check_square(quiver, n, "quiver");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (quiver[i][j] < 0) throw std::invalid_argument("negative arrow multiplicity");
      if (i == j && quiver[i][j] != 0) throw std::invalid_argument("quiver has a loop");
      if (quiver[i][j] > 0 && quiver[j][i] > 0) throw std::invalid_argument("quiver has a 2-cycle");
    }
  if (lambda) check_square(*lambda, n, "lambda");
  if (labels.empty()) labels.assign(n, "");
  if (labels.size() != n) throw std::invalid_argument("seed labels have the wrong size");
  std::set<int> distinct(ids.begin(), ids.end());
  if (distinct.size() != n) throw std::invalid_argument("duplicate vertex id");
  Seed s;
  s.ids = std::move(ids);
  s.frozen = std::move(frozen);
  s.quiver = std::move(quiver);
  s.names = std::move(names);
  s.labels = std::move(labels);
  s.initial_labels = s.labels;
  s.lambda = std::move(lambda);
  for (std::size_t i = 0; i < n; ++i) s.variables.push_back(LaurentPoly::variable(n, i));
  return s;
}

Seed initial_seed(const Stratum& s, const ClusterTilting& t) {
  std::vector<int> ids;
  std::vector<bool> frozen;
  std::vector<std::string> names, labels;
  const bool type_a = s.group().diagram().kind() == DynkinKind::A;
  for (const auto& u : t.summands) {
    ids.push_back(u.label);
    frozen.push_back(u.frozen);
    names.push_back("x" + std::to_string(u.label));
    labels.push_back(type_a ? initial_minor_spec(s, u.label).to_string() : "");
  }
  return make_seed(ids, frozen, t.quiver, names, labels, t.lambda);
}

IntMatrix exchange_matrix(const IntMatrix& quiver) {
  const std::size_t n = quiver.size();
  IntMatrix b(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b[i][j] = quiver[i][j] - quiver[j][i];
  return b;
}

IntMatrix quiver_from_exchange(const IntMatrix& b) {
  IntMatrix q = b;
  for (auto& row : q)
    for (auto& x : row) x = std::max(x, 0);
  return q;
}

IntMatrix mutate_exchange_matrix(const IntMatrix& b, std::size_t k) {
  const std::size_t n = b.size();
  IntMatrix out = b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k)
        out[i][j] = -b[i][j];
      else
        out[i][j] = b[i][j] + (std::abs(b[i][k]) * b[k][j] + b[i][k] * std::abs(b[k][j])) / 2;
    }
  return out;
}

IntMatrix mutate_quiver_steps(const IntMatrix& q, std::size_t k) {
  const std::size_t n = q.size();
  IntMatrix out = q;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != k && j != k) out[i][j] += q[i][k] * q[k][j];
  for (std::size_t i = 0; i < n; ++i) {
    out[i][k] = q[k][i];
    out[k][i] = q[i][k];
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      int c = std::min(out[i][j], out[j][i]);
      out[i][j] -= c;
      out[j][i] -= c;
    }
  return out;
}

IntMatrix mutate_lambda(const IntMatrix& lambda, const IntMatrix& b, std::size_t k) {
  const std::size_t n = lambda.size();
  IntMatrix e(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) e[i][i] = 1;
  e[k][k] = -1;
  for (std::size_t i = 0; i < n; ++i)
    if (i != k) e[i][k] = std::max(0, -b[i][k]);
  IntMatrix le(n, std::vector<int>(n, 0)), out(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) le[i][j] += lambda[i][l] * e[l][j];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) out[i][j] += e[l][i] * le[l][j];
  return out;
}

Seed mutate(const Seed& seed, std::size_t k) {
  const std::size_t n = seed.size();
  if (k >= n) throw std::out_of_range("mutation vertex out of range");
  if (seed.frozen[k]) throw FrozenVertex("vertex " + std::to_string(seed.ids[k]) + " is frozen");
  const std::size_t nv = seed.names.size();
  LaurentPoly in = LaurentPoly::constant(nv, 1), out = LaurentPoly::constant(nv, 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (seed.quiver[i][k] > 0) in = in * seed.variables[i].pow(seed.quiver[i][k]);
    if (seed.quiver[k][i] > 0) out = out * seed.variables[i].pow(seed.quiver[k][i]);
  }
  Seed r = seed;
  r.variables[k] = (in + out).divide(seed.variables[k]);
  IntMatrix b = exchange_matrix(seed.quiver);
  r.quiver = quiver_from_exchange(mutate_exchange_matrix(b, k));
  if (seed.lambda) r.lambda = mutate_lambda(*seed.lambda, b, k);
  // A variable keeps a label only while it is one of the initial variables.
  r.labels[k] = "";
  const LaurentPoly& nk = r.variables[k];
  if (nk.is_monomial() && nk.terms().begin()->second == 1) {
    const Exponent& e = nk.terms().begin()->first;
    for (std::size_t i = 0; i < nv; ++i)
      if (e == LaurentPoly::variable(nv, i).terms().begin()->first) r.labels[k] = seed.initial_labels[i];
  }
  if (!r.history.empty() && r.history.back() == seed.ids[k])
    r.history.pop_back();
  else
    r.history.push_back(seed.ids[k]);
  return r;
}

std::size_t vertex_index(const Seed& seed, int id) {
  auto it = std::find(seed.ids.begin(), seed.ids.end(), id);
  if (it == seed.ids.end()) throw std::out_of_range("no vertex with id " + std::to_string(id));
  return static_cast<std::size_t>(it - seed.ids.begin());
}

std::string seed_key(const Seed& seed) {
  auto vars = seed.variable_strings();
  std::vector<std::size_t> order(seed.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vars[a] < vars[b]; });
  std::string key;
  for (auto i : order) key += vars[i] + ";";
  key += "|";
  for (auto i : order)
    for (auto j : order) key += std::to_string(seed.quiver[i][j]) + ",";
  return key;
}

MutationClass enumerate_class(const Seed& seed, std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("enumeration cap must be positive");
  MutationClass out;
  std::unordered_map<std::string, std::size_t> seen;
  std::set<std::string> var_seen;
  auto record_vars = [&](const Seed& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s.frozen[i]) continue;
      std::string str = s.variables[i].to_string(s.names);
      if (var_seen.insert(str).second) {
        out.variables.push_back(s.variables[i]);
        out.variable_strings.push_back(str);
      }
    }
  };
  seen.emplace(seed_key(seed), 0);
  out.seeds.push_back({seed, -1, -1});
  record_vars(seed);
  for (std::size_t head = 0; head < out.seeds.size(); ++head) {
    for (std::size_t k = 0; k < seed.size(); ++k) {
      if (seed.frozen[k]) continue;
      Seed next = mutate(out.seeds[head].seed, k);
      std::string key = seed_key(next);
      if (seen.count(key)) continue;
      if (out.seeds.size() >= cap) {
        out.status = EnumerationStatus::cap_reached;
        return out;
      }
      seen.emplace(std::move(key), out.seeds.size());
      record_vars(next);
      out.seeds.push_back({std::move(next), static_cast<int>(head), static_cast<int>(k)});
    }
  }
  return out;
}

namespace {

// Name of the Dynkin diagram underlying an acyclic quiver, or empty if it is not Dynkin.
std::string dynkin_name(const IntMatrix& b) {
  const std::size_t n = b.size();
  std::vector<std::vector<std::size_t>> adj(n);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(b[i][j]) > 1) return "";
      if (b[i][j] != 0) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        ++edges;
      }
    }
  if (edges + 1 != n) return "";  // connected by construction, so a tree iff edges = n - 1
  std::vector<std::size_t> branch;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() > 3) return "";
    if (adj[i].size() == 3) branch.push_back(i);
  }
  if (branch.empty()) return "A" + std::to_string(n);
  if (branch.size() > 1) return "";
  std::vector<int> arms;
  for (std::size_t start : adj[branch[0]]) {
    int len = 1;
    std::size_t prev = branch[0], cur = start;
    while (adj[cur].size() == 2) {
      std::size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return "E" + std::to_string(n);
  return "";
}

bool is_acyclic(const IntMatrix& b) {
  const std::size_t n = b.size();
  std::vector<int> indeg(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (b[i][j] > 0) ++indeg[j];
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) stack.push_back(i);
  std::size_t seen = 0;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    ++seen;
    for (std::size_t j = 0; j < n; ++j)
      if (b[i][j] > 0 && --indeg[j] == 0) stack.push_back(j);
  }
  return seen == n;
}

// Finite type iff the component is mutation equivalent to a Dynkin orientation;
// an entry of absolute value >= 2 anywhere in the class rules finite type out,
// and an acyclic member decides the question either way.
std::string component_type(const IntMatrix& b0, std::size_t cap) {
  std::set<IntMatrix> seen{b0};
  std::deque<IntMatrix> queue{b0};
  while (!queue.empty()) {
    IntMatrix b = queue.front();
    queue.pop_front();
    for (const auto& row : b)
      for (int x : row)
        if (std::abs(x) > 1) return "";
    if (is_acyclic(b)) return dynkin_name(b);
    for (std::size_t k = 0; k < b.size(); ++k) {
      IntMatrix next = mutate_exchange_matrix(b, k);
      if (seen.insert(next).second) {
        if (seen.size() > cap) return "";
        queue.push_back(std::move(next));
      }
    }
  }
  return "";
}

}  // namespace

std::string detect_type(const Seed& seed, std::size_t cap) {
  IntMatrix b = exchange_matrix(seed.quiver);
  std::vector<std::size_t> mut;
  for (std::size_t i = 0; i < seed.size(); ++i)
    if (!seed.frozen[i]) mut.push_back(i);
  if (mut.empty()) return "A0";
  std::vector<int> comp(mut.size(), -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < mut.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t c = 0; c < mut.size(); ++c)
        if (comp[c] < 0 && b[mut[a]][mut[c]] != 0) {
          comp[c] = ncomp;
          stack.push_back(c);
        }
    }
    ++ncomp;
  }
  std::vector<std::string> names;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<std::size_t> members;
    for (std::size_t a = 0; a < mut.size(); ++a)
      if (comp[a] == c) members.push_back(mut[a]);
    IntMatrix sub(members.size(), std::vector<int>(members.size()));
    for (std::size_t x = 0; x < members.size(); ++x)
      for (std::size_t y = 0; y < members.size(); ++y) sub[x][y] = b[members[x]][members[y]];
    std::string name = component_type(sub, cap);
    if (name.empty()) return "infinite/unknown";
    names.push_back(name);
  }
  std::sort(names.begin(), names.end());
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? " x " : "") + names[i];
  return out;
}

Compatibility check_compatibility(const IntMatrix& b, const std::vector<bool>& frozen, const IntMatrix& lambda) {
  const std::size_t n = b.size();
  check_square(b, n, "exchange matrix");
  check_square(lambda, n, "lambda");
  if (frozen.size() != n) throw std::invalid_argument("frozen flags have the wrong size");
  Compatibility c;
  bool ok = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (lambda[i][j] != -lambda[j][i]) ok = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (frozen[k]) continue;
    std::vector<int> row(n, 0);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) row[j] += b[i][k] * lambda[i][j];
    for (std::size_t j = 0; j < n; ++j)
      if (j == k ? row[j] <= 0 : row[j] != 0) ok = false;
    c.product.push_back(std::move(row));
  }
  c.compatible = ok;
  return c;
}

std::vector<Rational> evaluate(const Seed& seed, const std::vector<Rational>& initial_values) {
  if (initial_values.size() != seed.names.size()) throw std::invalid_argument("one value per initial variable expected");
  for (std::size_t i = 0; i < initial_values.size(); ++i)
    if (initial_values[i] == 0) throw std::domain_error("initial variable " + seed.names[i] + " is zero");
  std::vector<Rational> out;
  for (const auto& v : seed.variables) out.push_back(v.evaluate(initial_values));
  return out;
}

}  // namespace strata
