#include <optional>
#include <random>
#include <stdexcept>

#include "strata/prepro.hpp"

namespace strata {

namespace {

Rational endo_trace(const Hom& f) {
  Rational t = 0;
  for (const auto& m : f) t += trace(m);
  return t;
}

bool hom_nilpotent(const Hom& f) {
  for (const auto& m : f)
    if (m.rows() > 0 && !power(m, m.rows()).is_zero()) return false;
  return true;
}

bool hom_invertible(const Hom& f) {
  for (const auto& m : f)
    if (m.rows() != m.cols() || rank(m) != m.rows()) return false;
  return true;
}

// Coordinates (w.r.t. the basis) of the elements of an ideal given by the
// linear condition cond(e_k) for every basis vector e_k; returns a basis of
// the subspace {c : sum c_k cond(e_k) = 0}.
template <class F>
Matrix ideal_by_condition(const std::vector<Hom>& basis, F cond) {
  std::vector<std::vector<Rational>> cols;
  for (const auto& e : basis) cols.push_back(cond(e));
  std::size_t rows = cols.empty() ? 0 : cols[0].size();
  Matrix sys(rows, basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t r = 0; r < rows; ++r) sys(r, k) = cols[k][r];
  return nullspace(sys);
}

std::vector<Rational> flatten_matrix(const Matrix& m) { return m.data(); }

// Splits m along the Fitting decomposition of f; f must be neither nilpotent
// nor invertible.
std::pair<Module, Module> fitting_split(const Module& m, const Hom& f) {
  Submodule ker, img;
  for (int v = 0; v < m.vertex_count(); ++v) {
    Matrix p = power(f[v], m.total_dim());
    ker.basis.push_back(nullspace(p));
    img.basis.push_back(column_basis(p));
  }
  return {restrict_to(m, ker).module, restrict_to(m, img).module};
}

class Splitter {
 public:
  explicit Splitter(const Module& m) : m_(m), basis_(hom_basis(m, m)), rad_(endomorphism_radical(basis_)) {}

  bool indecomposable() const { return basis_.size() - rad_.cols() == 1; }

  std::optional<std::pair<Module, Module>> split() {
    std::vector<Matrix> ideals;
    const int n = m_.vertex_count();
    // Left ideals {a : a(u) = 0} for vectors u in the socle, right ideals
    // {a : phi o a = 0} for functionals phi on the top, and the kernels of
    // the vertex representations.
    Submodule soc = socle(m_);
    Submodule rad = radical(m_);
    for (int v = 0; v < n; ++v) {
      const Matrix& s = soc.basis[v];
      for (std::size_t k = 0; k < s.cols(); ++k) ideals.push_back(kills_vector(v, s.col(k)));
      Matrix top_funcs = nullspace(rad.basis[v].transpose());
      for (std::size_t k = 0; k < top_funcs.cols(); ++k)
        ideals.push_back(kills_functional(v, top_funcs.col(k).transpose()));
      if (m_.dim(v) > 0) ideals.push_back(ideal_by_condition(basis_, [&](const Hom& e) { return flatten_matrix(e[v]); }));
    }
    for (int round = 0; round < 4; ++round)
      for (int v = 0; v < n; ++v) {
        if (soc.basis[v].cols() > 1) ideals.push_back(kills_vector(v, soc.basis[v] * random_column(soc.basis[v].cols())));
        if (m_.dim(v) > 0) ideals.push_back(kills_vector(v, random_column(m_.dim(v))));
      }
    for (const auto& ideal : ideals) {
      if (ideal.cols() == 0 || subspace_contains(rad_, ideal)) continue;
      for (int attempt = 0; attempt < 6; ++attempt) {
        std::vector<Rational> c(basis_.size(), 0);
        Matrix coeffs = ideal * random_column(ideal.cols());
        for (std::size_t k = 0; k < basis_.size(); ++k) c[k] = coeffs(k, 0);
        Hom f = hom_combination(basis_, c);
        if (hom_nilpotent(f) || hom_invertible(f)) continue;
        auto parts = fitting_split(m_, f);
        if (!parts.first.is_zero() && !parts.second.is_zero()) return parts;
      }
    }
    return std::nullopt;
  }

 private:
  Matrix kills_vector(int v, const Matrix& u) {
    return ideal_by_condition(basis_, [&](const Hom& e) { return flatten_matrix(e[v] * u); });
  }
  Matrix kills_functional(int v, const Matrix& phi) {
    return ideal_by_condition(basis_, [&](const Hom& e) { return flatten_matrix(phi * e[v]); });
  }
  Matrix random_column(std::size_t n) {
    std::uniform_int_distribution<int> d(-7, 7);
    Matrix c(n, 1);
    for (std::size_t i = 0; i < n; ++i) c(i, 0) = d(rng_);
    return c;
  }

  const Module& m_;
  std::vector<Hom> basis_;
  Matrix rad_;
  std::mt19937_64 rng_{0x5eed2024};
};

void split_into(const Module& m, std::vector<Module>& out) {
  if (m.is_zero()) return;
  Splitter sp(m);
  if (sp.indecomposable()) {
    out.push_back(m);
    return;
  }
  auto parts = sp.split();
  if (!parts) throw std::runtime_error("could not split decomposable module " + m.dims_string());
  split_into(parts->first, out);
  split_into(parts->second, out);
}

bool indecomposables_isomorphic(const Module& x, const Module& y) {
  if (x.dims() != y.dims()) return false;
  auto fs = hom_basis(x, y);
  auto gs = hom_basis(y, x);
  for (const auto& f : fs)
    for (const auto& g : gs)
      if (!hom_nilpotent(compose(g, f))) return true;
  return false;
}

}  // namespace

Matrix endomorphism_radical(const std::vector<Hom>& endo_basis) {
  const std::size_t d = endo_basis.size();
  Matrix gram(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b) gram(a, b) = gram(b, a) = endo_trace(compose(endo_basis[a], endo_basis[b]));
  return nullspace(gram);
}

std::vector<Module> indecomposable_summands(const Module& m) {
  std::vector<Module> out;
  split_into(m, out);
  return out;
}

bool is_indecomposable(const Module& m) { return !m.is_zero() && Splitter(m).indecomposable(); }

std::vector<Summand> decompose(const Module& m) {
  std::vector<Summand> out;
  for (auto& piece : indecomposable_summands(m)) {
    bool merged = false;
    for (auto& s : out)
      if (indecomposables_isomorphic(s.module, piece)) {
        ++s.multiplicity;
        merged = true;
        break;
      }
    if (!merged) out.push_back({std::move(piece), 1});
  }
  return out;
}

bool is_isomorphic(const Module& a, const Module& b) {
  if (a.dims() != b.dims()) return false;
  if (a.is_zero()) return true;
  auto ab = hom_basis(a, b);
  if (ab.empty() || ab.size() != hom_dim(b, a)) return false;
  std::mt19937_64 rng(0x150e0);
  for (int trial = 0; trial < 8; ++trial) {
    std::uniform_int_distribution<int> d(-(trial + 2), trial + 2);
    std::vector<Rational> c(ab.size());
    for (auto& x : c) x = d(rng);
    if (hom_invertible(hom_combination(ab, c))) return true;
  }
  auto pa = indecomposable_summands(a);
  auto pb = indecomposable_summands(b);
  if (pa.size() != pb.size()) return false;
  std::vector<bool> used(pb.size(), false);
  for (const auto& x : pa) {
    bool found = false;
    for (std::size_t j = 0; j < pb.size() && !found; ++j)
      if (!used[j] && indecomposables_isomorphic(x, pb[j])) used[j] = found = true;
    if (!found) return false;
  }
  return true;
}

}  // namespace strata
