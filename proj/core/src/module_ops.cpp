#include <stdexcept>

#include "strata/prepro.hpp"

namespace strata {

std::vector<std::size_t> Submodule::dims() const {
  std::vector<std::size_t> d;
  for (const auto& b : basis) d.push_back(b.cols());
  return d;
}

std::size_t Submodule::total_dim() const {
  std::size_t s = 0;
  for (const auto& b : basis) s += b.cols();
  return s;
}

Submodule whole_submodule(const Module& m) {
  Submodule s;
  for (int v = 0; v < m.vertex_count(); ++v) s.basis.push_back(Matrix::identity(m.dim(v)));
  return s;
}

Submodule zero_submodule(const Module& m) {
  Submodule s;
  for (int v = 0; v < m.vertex_count(); ++v) s.basis.emplace_back(m.dim(v), 0);
  return s;
}

bool is_submodule(const Module& m, const Submodule& s) {
  for (std::size_t a = 0; a < m.quiver()->arrows().size(); ++a) {
    const Arrow& ar = m.quiver()->arrows()[a];
    if (!subspace_contains(s.basis[ar.target], m.map(a) * s.basis[ar.source])) return false;
  }
  return true;
}

bool contains_submodule(const Submodule& big, const Submodule& small) {
  for (std::size_t v = 0; v < big.basis.size(); ++v)
    if (!subspace_contains(big.basis[v], small.basis[v])) return false;
  return true;
}

bool same_submodule(const Submodule& a, const Submodule& b) {
  return a.dims() == b.dims() && contains_submodule(a, b);
}

Submodule submodule_sum(const Submodule& a, const Submodule& b) {
  Submodule s;
  for (std::size_t v = 0; v < a.basis.size(); ++v) s.basis.push_back(subspace_sum(a.basis[v], b.basis[v]));
  return s;
}

Submodule submodule_intersection(const Submodule& a, const Submodule& b) {
  Submodule s;
  for (std::size_t v = 0; v < a.basis.size(); ++v) s.basis.push_back(subspace_intersection(a.basis[v], b.basis[v]));
  return s;
}

Submodule generated_submodule(const Module& m, const std::vector<Matrix>& vectors) {
  Submodule s;
  for (int v = 0; v < m.vertex_count(); ++v) s.basis.push_back(column_basis(vectors[v]));
  const auto& arrows = m.quiver()->arrows();
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      const Arrow& ar = arrows[a];
      Matrix img = m.map(a) * s.basis[ar.source];
      if (img.cols() == 0 || subspace_contains(s.basis[ar.target], img)) continue;
      s.basis[ar.target] = subspace_sum(s.basis[ar.target], img);
      grew = true;
    }
  }
  return s;
}

Restriction restrict_to(const Module& m, const Submodule& s) {
  const auto& arrows = m.quiver()->arrows();
  std::vector<Matrix> left;
  for (const auto& b : s.basis) left.push_back(left_inverse(b));
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const Arrow& ar = arrows[a];
    maps.push_back(left[ar.target] * (m.map(a) * s.basis[ar.source]));
  }
  return {Module(m.quiver(), s.dims(), std::move(maps)), s.basis};
}

Quotient quotient(const Module& m, const Submodule& s) {
  const auto& arrows = m.quiver()->arrows();
  const int n = m.vertex_count();
  Hom proj(n), sec(n);
  std::vector<std::size_t> dims(n);
  for (int v = 0; v < n; ++v) {
    Matrix comp = complement_basis(s.basis[v], m.dim(v));
    Matrix full = hstack(s.basis[v], comp);
    Matrix inv = *inverse(full);
    proj[v] = inv.block(s.basis[v].cols(), 0, comp.cols(), m.dim(v));
    sec[v] = comp;
    dims[v] = comp.cols();
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const Arrow& ar = arrows[a];
    maps.push_back(proj[ar.target] * (m.map(a) * sec[ar.source]));
  }
  return {Module(m.quiver(), std::move(dims), std::move(maps)), std::move(proj), std::move(sec)};
}

Module direct_sum(const Module& a, const Module& b) {
  std::vector<std::size_t> dims;
  for (int v = 0; v < a.vertex_count(); ++v) dims.push_back(a.dim(v) + b.dim(v));
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < a.maps().size(); ++k) maps.push_back(block_diag(a.map(k), b.map(k)));
  return Module(a.quiver(), std::move(dims), std::move(maps));
}

Module direct_sum(const std::vector<Module>& parts, const QuiverPtr& quiver) {
  Module out = Module::zero(quiver);
  for (const auto& p : parts) out = direct_sum(out, p);
  return out;
}

Module power(const Module& m, std::size_t copies) {
  Module out = Module::zero(m.quiver());
  for (std::size_t k = 0; k < copies; ++k) out = direct_sum(out, m);
  return out;
}

Submodule socle_at(const Module& m, int j) {
  Submodule s = zero_submodule(m);
  Matrix stacked(0, m.dim(j));
  for (int a : m.quiver()->arrows_from(j)) stacked = vstack(stacked, m.map(a));
  s.basis[j] = nullspace(stacked);
  return s;
}

Submodule socle(const Module& m) {
  Submodule s = zero_submodule(m);
  for (int v = 0; v < m.vertex_count(); ++v) s.basis[v] = socle_at(m, v).basis[v];
  return s;
}

Submodule radical_at(const Module& m, int j) {
  Submodule s = whole_submodule(m);
  Matrix images(m.dim(j), 0);
  for (int a : m.quiver()->arrows_to(j)) images = hstack(images, m.map(a));
  s.basis[j] = column_basis(images);
  return s;
}

Submodule radical(const Module& m) {
  Submodule s = whole_submodule(m);
  for (int v = 0; v < m.vertex_count(); ++v) s.basis[v] = radical_at(m, v).basis[v];
  return s;
}

Submodule socle_sequence(const Module& m, const std::vector<int>& letters) {
  Submodule s = zero_submodule(m);
  for (int j : letters) {
    Quotient q = quotient(m, s);
    Matrix k = socle_at(q.module, j).basis[j];
    if (k.cols() == 0) continue;
    s.basis[j] = subspace_sum(s.basis[j], q.section[j] * k);
  }
  return s;
}

Module apply_e(const Module& m, int i) { return restrict_to(m, radical_at(m, i)).module; }

Module apply_e_dagger(const Module& m, int i) { return quotient(m, socle_at(m, i)).module; }

Module apply_e_word(const Module& m, const Word& w) {
  Module cur = m;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = apply_e(cur, *it);
  return cur;
}

Module apply_e_dagger_word(const Module& m, const Word& w) {
  Module cur = m;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = apply_e_dagger(cur, *it);
  return cur;
}

std::vector<Hom> hom_basis(const Module& m, const Module& n) {
  const int nv = m.vertex_count();
  const auto& arrows = m.quiver()->arrows();
  std::vector<std::size_t> off(nv + 1, 0);
  for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + n.dim(v) * m.dim(v);
  const std::size_t unknowns = off[nv];
  if (unknowns == 0) return {};
  std::size_t eqs = 0;
  for (const auto& ar : arrows) eqs += n.dim(ar.target) * m.dim(ar.source);
  Matrix sys(eqs, unknowns);
  std::size_t row = 0;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const int s = arrows[a].source, t = arrows[a].target;
    const Matrix& na = n.map(a);
    const Matrix& ma = m.map(a);
    // (N_a f_s - f_t M_a)(p, q) = 0
    for (std::size_t p = 0; p < n.dim(t); ++p)
      for (std::size_t q = 0; q < m.dim(s); ++q, ++row) {
        for (std::size_t x = 0; x < n.dim(s); ++x)
          if (sgn(na(p, x)) != 0) sys(row, off[s] + x * m.dim(s) + q) += na(p, x);
        for (std::size_t y = 0; y < m.dim(t); ++y)
          if (sgn(ma(y, q)) != 0) sys(row, off[t] + p * m.dim(t) + y) -= ma(y, q);
      }
  }
  Matrix ker = nullspace(sys);
  std::vector<Hom> out;
  for (std::size_t k = 0; k < ker.cols(); ++k) {
    Hom f;
    for (int v = 0; v < nv; ++v) {
      Matrix fv(n.dim(v), m.dim(v));
      for (std::size_t p = 0; p < n.dim(v); ++p)
        for (std::size_t q = 0; q < m.dim(v); ++q) fv(p, q) = ker(off[v] + p * m.dim(v) + q, k);
      f.push_back(std::move(fv));
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t hom_dim(const Module& m, const Module& n) { return hom_basis(m, n).size(); }

Hom compose(const Hom& g, const Hom& f) {
  Hom out;
  for (std::size_t v = 0; v < f.size(); ++v) out.push_back(g[v] * f[v]);
  return out;
}

Hom hom_zero(const Module& m, const Module& n) {
  Hom out;
  for (int v = 0; v < m.vertex_count(); ++v) out.emplace_back(n.dim(v), m.dim(v));
  return out;
}

Hom hom_identity(const Module& m) {
  Hom out;
  for (int v = 0; v < m.vertex_count(); ++v) out.push_back(Matrix::identity(m.dim(v)));
  return out;
}

Hom hom_combination(const std::vector<Hom>& basis, const std::vector<Rational>& coeffs) {
  if (basis.empty()) throw std::invalid_argument("hom_combination of an empty basis");
  Hom out;
  for (const auto& b : basis[0]) out.emplace_back(b.rows(), b.cols());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (sgn(coeffs[k]) == 0) continue;
    for (std::size_t v = 0; v < out.size(); ++v) out[v] += basis[k][v] * coeffs[k];
  }
  return out;
}

bool hom_is_zero(const Hom& f) {
  for (const auto& m : f)
    if (!m.is_zero()) return false;
  return true;
}

bool is_hom(const Module& m, const Module& n, const Hom& f) {
  const auto& arrows = m.quiver()->arrows();
  for (std::size_t a = 0; a < arrows.size(); ++a)
    if (n.map(a) * f[arrows[a].source] != f[arrows[a].target] * m.map(a)) return false;
  return true;
}

Submodule hom_image(const Hom& f, const Module& target) {
  Submodule s;
  for (int v = 0; v < target.vertex_count(); ++v) s.basis.push_back(column_basis(f[v]));
  return s;
}

Submodule hom_kernel(const Hom& f, const Module& source) {
  Submodule s;
  for (int v = 0; v < source.vertex_count(); ++v) s.basis.push_back(nullspace(f[v]));
  return s;
}

std::vector<Rational> flatten(const Hom& f) {
  std::vector<Rational> out;
  for (const auto& m : f) out.insert(out.end(), m.data().begin(), m.data().end());
  return out;
}

Submodule trace_submodule(const Module& g, const Module& x) {
  Submodule s = zero_submodule(x);
  std::vector<Matrix> images(x.vertex_count());
  for (int v = 0; v < x.vertex_count(); ++v) images[v] = Matrix(x.dim(v), 0);
  for (const auto& f : hom_basis(g, x))
    for (int v = 0; v < x.vertex_count(); ++v) images[v] = hstack(images[v], f[v]);
  for (int v = 0; v < x.vertex_count(); ++v) s.basis[v] = column_basis(images[v]);
  return s;
}

Submodule reject_submodule(const Module& x, const Module& g) {
  Submodule s;
  std::vector<Matrix> stacked(x.vertex_count());
  for (int v = 0; v < x.vertex_count(); ++v) stacked[v] = Matrix(0, x.dim(v));
  for (const auto& f : hom_basis(x, g))
    for (int v = 0; v < x.vertex_count(); ++v) stacked[v] = vstack(stacked[v], f[v]);
  for (int v = 0; v < x.vertex_count(); ++v) s.basis.push_back(nullspace(stacked[v]));
  return s;
}

long long ext1_dim(const Module& m, const Module& n) {
  long long h = static_cast<long long>(hom_dim(m, n) + hom_dim(n, m));
  return h - m.quiver()->bilinear(m.dims(), n.dims());
}

bool is_rigid(const Module& m) { return ext1_dim(m, m) == 0; }

}  // namespace strata
