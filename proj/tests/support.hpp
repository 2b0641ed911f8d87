#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "strata/minors.hpp"
#include "strata/prepro.hpp"

// Oracles computed from first principles, kept apart from the library code paths.

namespace oracle {

using strata::Matrix;
using strata::Module;
using strata::Rational;

// Leibniz expansion.
inline Rational leibniz_det(const Matrix& m) {
  std::vector<int> p(m.rows());
  std::iota(p.begin(), p.end(), 0);
  Rational det = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < p.size(); ++i) term *= m(i, p[i]);
    det += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return det;
}

// Ext^1(M, N) as cocycles modulo coboundaries: families f_a : M_s(a) -> N_t(a)
// such that [[N_a, f_a], [0, M_a]] satisfies the preprojective relations.
inline long long ext1(const Module& m, const Module& n) {
  const auto& arrows = m.quiver()->arrows();
  const int nv = m.vertex_count();
  std::vector<std::size_t> f_off(arrows.size() + 1, 0), h_off(nv + 1, 0);
  for (std::size_t a = 0; a < arrows.size(); ++a)
    f_off[a + 1] = f_off[a] + n.dim(arrows[a].target) * m.dim(arrows[a].source);
  for (int v = 0; v < nv; ++v) h_off[v + 1] = h_off[v] + n.dim(v) * m.dim(v);
  const std::size_t nf = f_off.back(), nh = h_off.back();

  // Relation at vertex i, linearized: sum sign(a) (f_a M_a* + N_a f_a*) = 0, M_i -> N_i.
  std::size_t rel_rows = 0;
  for (int v = 0; v < nv; ++v) rel_rows += n.dim(v) * m.dim(v);
  Matrix rel(rel_rows, nf);
  std::size_t row0 = 0;
  for (int i = 0; i < nv; ++i) {
    const std::size_t di = m.dim(i), ei = n.dim(i);
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      if (arrows[a].target != i) continue;
      const int j = arrows[a].source;
      const std::size_t as = static_cast<std::size_t>(arrows[a].reverse);
      const Rational sg = arrows[a].sign;
      const Matrix& mstar = m.map(static_cast<int>(as));  // M_i -> M_j
      const Matrix& na = n.map(static_cast<int>(a));        // N_j -> N_i
      // f_a M_a*: entry (r, c) = sum_k f_a(r, k) mstar(k, c), f_a is e_i x d_j.
      for (std::size_t r = 0; r < ei; ++r)
        for (std::size_t c = 0; c < di; ++c)
          for (std::size_t k = 0; k < m.dim(j); ++k) {
            rel(row0 + r * di + c, f_off[a] + r * m.dim(j) + k) += sg * mstar(k, c);
          }
      // N_a f_a*: f_a* is e_j x d_i.
      for (std::size_t r = 0; r < ei; ++r)
        for (std::size_t c = 0; c < di; ++c)
          for (std::size_t k = 0; k < n.dim(j); ++k) rel(row0 + r * di + c, f_off[as] + k * di + c) += sg * na(r, k);
    }
    row0 += ei * di;
  }
  const std::size_t z = nf - strata::rank(rel);

  // Coboundaries f_a = N_a h_s - h_t M_a.
  Matrix cob(nf, nh);
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const int s = arrows[a].source, t = arrows[a].target;
    const Matrix& na = n.map(static_cast<int>(a));
    const Matrix& ma = m.map(static_cast<int>(a));
    for (std::size_t r = 0; r < n.dim(t); ++r)
      for (std::size_t c = 0; c < m.dim(s); ++c) {
        const std::size_t row = f_off[a] + r * m.dim(s) + c;
        for (std::size_t k = 0; k < n.dim(s); ++k) cob(row, h_off[s] + k * m.dim(s) + c) += na(r, k);
        for (std::size_t k = 0; k < m.dim(t); ++k) cob(row, h_off[t] + r * m.dim(t) + k) -= ma(k, c);
      }
  }
  return static_cast<long long>(z) - static_cast<long long>(strata::rank(cob));
}

// Bruhat order on S_n by the tableau criterion on one-line notation.
inline bool tableau_leq(const std::vector<int>& v, const std::vector<int>& w) {
  for (std::size_t i = 1; i <= v.size(); ++i) {
    std::vector<int> a(v.begin(), v.begin() + i), b(w.begin(), w.begin() + i);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t k = 0; k < i; ++k)
      if (a[k] > b[k]) return false;
  }
  return true;
}

// One-line notation of s_{w[0]} s_{w[1]} ... (composition of value swaps).
inline std::vector<int> word_permutation(int n, const std::vector<int>& word) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    for (int& x : p) {
      if (x == *it + 1)
        x = *it + 2;
      else if (x == *it + 2)
        x = *it + 1;
    }
  }
  return p;
}

inline Matrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, int sparsity = 0) {
  std::uniform_int_distribution<int> coin(0, 9);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (coin(rng) >= sparsity) m(i, j) = strata::random_rational(rng);
  return m;
}

}  // namespace oracle
