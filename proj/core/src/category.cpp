#include "strata/category.hpp"

#include <algorithm>
#include <stdexcept>

namespace strata {

namespace {

Matrix rows_of(const std::vector<std::vector<Rational>>& vecs, std::size_t width) {
  Matrix m(vecs.size(), width);
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) m(i, j) = vecs[i][j];
  return m;
}

std::size_t flat_size(const Module& a, const Module& b) {
  std::size_t s = 0;
  for (int v = 0; v < a.vertex_count(); ++v) s += a.dim(v) * b.dim(v);
  return s;
}

// Radical maps T_a -> T_b: everything when a != b, the Jacobson radical of End otherwise.
std::vector<Hom> radical_maps(const std::vector<Hom>& homs, bool endo) {
  if (!endo) return homs;
  Matrix rad = endomorphism_radical(homs);
  std::vector<Hom> out;
  for (std::size_t k = 0; k < rad.cols(); ++k) {
    std::vector<Rational> c(homs.size());
    for (std::size_t i = 0; i < homs.size(); ++i) c[i] = rad(i, k);
    out.push_back(hom_combination(homs, c));
  }
  return out;
}

struct Approximation {
  std::vector<std::size_t> component_summand;
  std::vector<Hom> component_map;
  Module middle;
  Hom map;  // middle -> target
};

// Minimal right add(T)-approximation of x, T given by `summands`.
Approximation right_approximation(const std::vector<const Module*>& summands, const Module& x) {
  std::vector<std::size_t> owner;
  std::vector<Hom> maps;
  for (std::size_t k = 0; k < summands.size(); ++k)
    for (auto& f : hom_basis(*summands[k], x)) {
      owner.push_back(k);
      maps.push_back(std::move(f));
    }
  std::vector<bool> alive(maps.size(), true);
  for (std::size_t c = 0; c < maps.size(); ++c) {
    const Module& src = *summands[owner[c]];
    std::vector<std::vector<Rational>> span;
    for (std::size_t d = 0; d < maps.size(); ++d) {
      if (d == c || !alive[d]) continue;
      for (const auto& h : hom_basis(src, *summands[owner[d]])) span.push_back(flatten(compose(maps[d], h)));
    }
    const std::size_t width = flat_size(src, x);
    if (span.empty()) continue;
    Matrix sp = rows_of(span, width).transpose();
    Matrix target = rows_of({flatten(maps[c])}, width).transpose();
    if (subspace_contains(sp, target)) alive[c] = false;
  }
  Approximation out;
  out.middle = Module::zero(x.quiver());
  out.map = hom_zero(out.middle, x);
  for (std::size_t c = 0; c < maps.size(); ++c) {
    if (!alive[c]) continue;
    out.component_summand.push_back(owner[c]);
    out.component_map.push_back(maps[c]);
    out.middle = direct_sum(out.middle, *summands[owner[c]]);
    for (int v = 0; v < x.vertex_count(); ++v) out.map[v] = hstack(out.map[v], maps[c][v]);
  }
  return out;
}

bool surjective(const Hom& g, const Module& target) {
  for (int v = 0; v < target.vertex_count(); ++v)
    if (rank(g[v]) != target.dim(v)) return false;
  return true;
}

// Every endomorphism psi of B with g psi = 0 lies in rad End(B).
bool right_minimal(const Approximation& ap) {
  auto endo = hom_basis(ap.middle, ap.middle);
  if (endo.empty()) return true;
  std::vector<std::vector<Rational>> rows;
  for (const auto& e : endo) rows.push_back(flatten(compose(ap.map, e)));
  std::size_t width = rows[0].size();
  Matrix kernel = width == 0 ? Matrix::identity(endo.size()) : nullspace(rows_of(rows, width).transpose());
  if (kernel.cols() == 0) return true;
  return subspace_contains(endomorphism_radical(endo), kernel);
}

}  // namespace

Stratum::Stratum(std::shared_ptr<const Preprojective> algebra, const WeylElement& v, const WeylElement& w, Word word)
    : algebra_(std::move(algebra)), group_(algebra_->diagram()), v_(v), w_(w), word_(std::move(word)) {
  if (!group_.is_reduced(word_) || group_.from_word(word_) != w_)
    throw InvalidWord("word " + format_word(word_) + " is not a reduced word of w");
  if (!group_.bruhat_leq(v_, w_)) throw NotBelow("v is not below w in the Bruhat order");
  vseq_ = group_.v_sequence(v_, word_);
  const QuiverPtr& q = algebra_->quiver();
  Word u = group_.reduced_word(group_.mul(group_.inverse(w_), group_.longest()));
  Word uv = group_.reduced_word(group_.mul(group_.inverse(v_), group_.longest()));
  Word vinv = group_.reduced_word(group_.inverse(v_));
  std::vector<Module> iv;
  for (int i = 0; i < algebra_->rank(); ++i) {
    iw_.push_back(apply_e_word(algebra_->injective(i), u));
    iv.push_back(apply_e_word(algebra_->injective(i), uv));
  }
  iw_sum_ = direct_sum(iw_, q);
  iv_sum_ = direct_sum(iv, q);
  jv_ = apply_e_dagger_word(algebra_->injective_sum(), vinv);
}

Stratum Stratum::make(const std::string& type, const std::string& v_text, const std::string& w_text,
                      const std::string& word_text) {
  auto algebra = std::make_shared<const Preprojective>(DynkinDiagram::parse(type));
  WeylGroup g(algebra->diagram());
  auto element = [&](const std::string& text, const char* name) {
    Word word = parse_word(text);
    if (!g.is_reduced(word)) throw InvalidWord(std::string(name) + " is not given by a reduced word: '" + text + "'");
    return g.from_word(word);
  };
  WeylElement v = element(v_text, "v");
  WeylElement w = element(w_text, "w");
  Word word = word_text.empty() ? g.reduced_word(w) : parse_word(word_text);
  return Stratum(std::move(algebra), v, w, std::move(word));
}

std::vector<int> Stratum::j_set() const {
  std::vector<int> out;
  for (std::size_t k = 1; k < vseq_.size(); ++k)
    if (vseq_[k] == vseq_[k - 1]) out.push_back(static_cast<int>(k));
  return out;
}

std::vector<Module> Stratum::projective_injectives() const {
  Word vinv = group_.reduced_word(group_.inverse(v_));
  std::vector<Module> out;
  for (const auto& m : iw_) out.push_back(apply_e_dagger_word(m, vinv));
  return out;
}

std::vector<Module> Stratum::projective_injectives_via_torsion() const {
  std::vector<Module> out;
  for (const auto& m : iw_) out.push_back(quotient_by_t_v(m));
  return out;
}

Submodule Stratum::v_submodule(int k) const {
  std::vector<int> letters;
  for (int s = k; s >= 1; --s) letters.push_back(letter(s));
  return socle_sequence(algebra_->injective(letter(k)), letters);
}

Module Stratum::v_module(int k) const { return restrict_to(algebra_->injective(letter(k)), v_submodule(k)).module; }

std::vector<int> Stratum::gamma(int k) const {
  const int n = algebra_->rank();
  const int i = letter(k);
  Word x;
  for (int s = 1; s <= k; ++s) x.push_back(letter(s));
  auto image = group_.apply_to_fundamental(group_.from_word(x), i);
  Matrix cartan(n, n), diff(n, 1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) cartan(a, b) = algebra_->diagram().cartan(a, b);
    diff(a, 0) = (a == i ? 1 : 0) - image[a];
  }
  Matrix roots = *solve(cartan, diff);
  std::vector<int> out(n);
  for (int a = 0; a < n; ++a) out[a] = static_cast<int>(roots(a, 0).get_num().get_si());
  return out;
}

Module Stratum::u_module(int k) const {
  return apply_e_dagger_word(v_module(k), group_.reduced_word(group_.inverse(vseq_[k])));
}

Module Stratum::u_module_via_torsion(int k) const { return quotient_by_t_v(v_module(k)); }

Module Stratum::layer_module(int k) const {
  const int i = letter(k);
  int prev = 0;
  for (int s = k - 1; s >= 1; --s)
    if (letter(s) == i) {
      prev = s;
      break;
    }
  const Module& q = algebra_->injective(i);
  Submodule big = v_submodule(k);
  Restriction vk = restrict_to(q, big);
  if (prev == 0) return vk.module;
  Submodule small = v_submodule(prev);
  Submodule inside;
  for (int v = 0; v < q.vertex_count(); ++v) inside.basis.push_back(left_inverse(big.basis[v]) * small.basis[v]);
  return quotient(vk.module, inside).module;
}

bool Stratum::in_cw(const Module& x) const { return trace_submodule(iw_sum_, x).total_dim() == x.total_dim(); }

bool Stratum::in_cv_up(const Module& x) const { return reject_submodule(x, jv_).total_dim() == 0; }

std::vector<Module> ClusterTilting::modules() const {
  std::vector<Module> out;
  for (const auto& s : summands) out.push_back(s.module);
  return out;
}

IntMatrix gabriel_quiver(const std::vector<Module>& t) {
  const std::size_t n = t.size();
  std::vector<std::vector<std::vector<Hom>>> rad(n, std::vector<std::vector<Hom>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rad[a][b] = radical_maps(hom_basis(t[a], t[b]), a == b);
  IntMatrix q(n, std::vector<int>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (rad[a][b].empty()) continue;
      std::vector<std::vector<Rational>> products;
      for (std::size_t l = 0; l < n; ++l)
        for (const auto& f : rad[a][l])
          for (const auto& g : rad[l][b]) products.push_back(flatten(compose(g, f)));
      std::size_t sq = products.empty() ? 0 : rank(rows_of(products, flat_size(t[a], t[b])));
      q[a][b] = static_cast<int>(rad[a][b].size() - sq);
    }
  return q;
}

IntMatrix poisson_matrix(const std::vector<Module>& t) {
  const std::size_t n = t.size();
  IntMatrix h(n, std::vector<int>(n, 0)), out = h;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) h[a][b] = static_cast<int>(hom_dim(t[a], t[b]));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out[a][b] = h[a][b] - h[b][a];
  return out;
}

bool is_rigid_collection(const std::vector<Module>& t) {
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = a; b < t.size(); ++b)
      if (ext1_dim(t[a], t[b]) != 0) return false;
  return true;
}

ClusterTilting initial_tilting(const Stratum& s) {
  ClusterTilting t;
  for (int j = 1; j <= s.r(); ++j) {
    Module u = s.u_module(j);
    if (u.is_zero()) {
      t.log.push_back("U" + std::to_string(j) + " = 0");
      continue;
    }
    auto pieces = indecomposable_summands(u);
    if (pieces.size() > 1)
      t.log.push_back("U" + std::to_string(j) + " splits into " + std::to_string(pieces.size()) + " summands");
    for (auto& piece : pieces) {
      int dup = -1;
      for (const auto& existing : t.summands)
        if (is_isomorphic(existing.module, piece)) {
          dup = existing.label;
          break;
        }
      if (dup >= 0) {
        t.log.push_back("U" + std::to_string(j) + " isomorphic to U" + std::to_string(dup));
        continue;
      }
      t.summands.push_back({j, std::move(piece), false});
    }
  }
  std::vector<Module> frozen;
  for (const auto& q : s.projective_injectives())
    for (auto& piece : indecomposable_summands(q)) frozen.push_back(std::move(piece));
  for (auto& sm : t.summands)
    for (const auto& f : frozen)
      if (is_isomorphic(sm.module, f)) {
        sm.frozen = true;
        break;
      }
  auto mods = t.modules();
  t.rigid = is_rigid_collection(mods);
  t.quiver = gabriel_quiver(mods);
  t.lambda = poisson_matrix(mods);
  const int expected = s.group().length(s.w()) - s.group().length(s.v());
  if (static_cast<int>(t.summands.size()) != expected)
    throw std::runtime_error("summand count " + std::to_string(t.summands.size()) + " differs from l(w)-l(v) = " +
                             std::to_string(expected));
  if (!t.rigid) throw std::runtime_error("initial cluster-tilting module is not rigid");
  return t;
}

ClusterTilting categorical_mutation(const ClusterTilting& t, std::size_t index, ExchangeData* data) {
  if (index >= t.summands.size()) throw std::out_of_range("mutation index out of range");
  if (t.summands[index].frozen) throw std::invalid_argument("cannot mutate a frozen summand");
  const Module& m = t.summands[index].module;
  std::vector<const Module*> others;
  std::vector<std::size_t> other_index;
  for (std::size_t k = 0; k < t.summands.size(); ++k)
    if (k != index) {
      others.push_back(&t.summands[k].module);
      other_index.push_back(k);
    }
  Approximation ap = right_approximation(others, m);
  if (!surjective(ap.map, m)) throw std::runtime_error("approximation of the mutated summand is not surjective");
  Module replacement = restrict_to(ap.middle, hom_kernel(ap.map, ap.middle)).module;
  if (replacement.is_zero()) throw std::runtime_error("exchange produced a zero module");

  ClusterTilting out = t;
  out.summands[index].module = replacement;
  out.log.clear();
  auto mods = out.modules();
  out.rigid = is_rigid_collection(mods);
  out.quiver = gabriel_quiver(mods);
  out.lambda = poisson_matrix(mods);

  if (data) {
    data->old_module = m;
    data->new_module = replacement;
    data->middle_out.assign(t.summands.size(), 0);
    data->middle_in.assign(t.summands.size(), 0);
    for (auto c : ap.component_summand) ++data->middle_out[other_index[c]];
    data->approximation_minimal = right_minimal(ap);
    Approximation back = right_approximation(others, replacement);
    for (auto c : back.component_summand) ++data->middle_in[other_index[c]];
    bool ok = surjective(back.map, replacement) && right_minimal(back);
    if (ok) {
      Module k = restrict_to(back.middle, hom_kernel(back.map, back.middle)).module;
      ok = is_isomorphic(k, m);
    }
    data->second_sequence_ok = ok;
    data->ext1_exchange = ext1_dim(m, replacement);
    IntMatrix fz = mutate_quiver(t.quiver, index);
    bool same = true;
    for (std::size_t a = 0; a < fz.size(); ++a)
      for (std::size_t b = 0; b < fz.size(); ++b) {
        if (t.summands[a].frozen && t.summands[b].frozen) continue;
        if (fz[a][b] != out.quiver[a][b]) same = false;
      }
    data->quiver_matches_fz = same;
  }
  return out;
}

IntMatrix mutate_quiver(const IntMatrix& q, std::size_t k) {
  const std::size_t n = q.size();
  std::vector<std::vector<int>> b(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b[i][j] = q[i][j] - q[j][i];
  auto nb = b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k)
        nb[i][j] = -b[i][j];
      else if (b[i][k] > 0 && b[k][j] > 0)
        nb[i][j] = b[i][j] + b[i][k] * b[k][j];
      else if (b[i][k] < 0 && b[k][j] < 0)
        nb[i][j] = b[i][j] - b[i][k] * b[k][j];
    }
  IntMatrix out(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = std::max(nb[i][j], 0);
  return out;
}

}  // namespace strata
