#include "strata/minors.hpp"

#include <algorithm>

namespace strata {

namespace {

void require_type_a(const WeylGroup& g) {
  if (g.diagram().kind() != DynkinKind::A)
    throw NotTypeA("minor evaluation is only available in type A, not " + g.diagram().name());
}

int matrix_size(const WeylGroup& g) { return g.rank() + 1; }

Matrix generator(int n, int i, bool barbar) {
  Matrix m = Matrix::identity(n);
  m(i, i) = 0;
  m(i + 1, i + 1) = 0;
  m(i, i + 1) = barbar ? 1 : -1;
  m(i + 1, i) = barbar ? -1 : 1;
  return m;
}

Matrix rep_word(int n, const Word& word, bool barbar) {
  Matrix m = Matrix::identity(n);
  for (int a : word) {
    if (a < 0 || a + 1 >= n) throw InvalidWord("letter out of range for SL(" + std::to_string(n) + ")");
    m = m * generator(n, a, barbar);
  }
  return m;
}

std::vector<int> one_line(const WeylGroup& g, const WeylElement& w) { return g.to_permutation(w); }

}  // namespace

std::string MinorSpec::to_string() const {
  bool small = true;
  for (int r : rows) small = small && r < 10;
  for (int c : cols) small = small && c < 10;
  auto join = [&](const std::vector<int>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k && !small) s += '.';
      s += std::to_string(v[k]);
    }
    return s;
  };
  return "Delta_{" + join(rows) + "," + join(cols) + "}";
}

Rational minor(const Matrix& x, const MinorSpec& spec) {
  if (spec.rows.size() != spec.cols.size()) throw std::invalid_argument("minor needs equally many rows and columns");
  std::vector<std::size_t> r, c;
  for (int a : spec.rows) {
    if (a < 1 || a > static_cast<int>(x.rows())) throw std::out_of_range("minor row index out of range");
    r.push_back(a - 1);
  }
  for (int b : spec.cols) {
    if (b < 1 || b > static_cast<int>(x.cols())) throw std::out_of_range("minor column index out of range");
    c.push_back(b - 1);
  }
  return determinant(x.select_rows(r).select_cols(c));
}

std::vector<int> weight_subset(const WeylGroup& g, const WeylElement& u, int i) {
  require_type_a(g);
  auto perm = one_line(g, u);
  std::vector<int> out(perm.begin(), perm.begin() + i + 1);
  std::sort(out.begin(), out.end());
  return out;
}

MinorSpec minor_spec(const WeylGroup& g, const WeylElement& u, const WeylElement& v, int i) {
  return {weight_subset(g, u, i), weight_subset(g, v, i)};
}

Rational generalized_minor(const WeylGroup& g, const WeylElement& u, const WeylElement& v, int i, const Matrix& x) {
  Matrix y = rep_barbar(g, g.inverse(u)) * x * rep_bar(g, v);
  return determinant(y.block(0, 0, i + 1, i + 1));
}

Matrix rep_bar_word(int n, const Word& word) { return rep_word(n, word, false); }
Matrix rep_barbar_word(int n, const Word& word) { return rep_word(n, word, true); }

Matrix rep_bar(const WeylGroup& g, const WeylElement& w) {
  require_type_a(g);
  return rep_bar_word(matrix_size(g), g.reduced_word(w));
}

Matrix rep_barbar(const WeylGroup& g, const WeylElement& w) {
  require_type_a(g);
  return rep_barbar_word(matrix_size(g), g.reduced_word(w));
}

Matrix gauss_plus(const Matrix& z) {
  if (z.rows() != z.cols()) throw std::invalid_argument("gauss_plus needs a square matrix");
  const std::size_t n = z.rows();
  Matrix u = z;
  for (std::size_t k = 0; k < n; ++k) {
    if (u(k, k) == 0) throw NotInG0("leading principal minor of size " + std::to_string(k + 1) + " vanishes");
    for (std::size_t i = k + 1; i < n; ++i) {
      if (u(i, k) == 0) continue;
      Rational f = u(i, k) / u(k, k);
      for (std::size_t j = k; j < n; ++j) u(i, j) -= f * u(k, j);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Rational d = u(i, i);
    for (std::size_t j = i; j < n; ++j) u(i, j) /= d;
  }
  return u;
}

Matrix zeta(const WeylGroup& g, const WeylElement& v, const WeylElement& w, const Matrix& x) {
  return gauss_plus(rep_barbar(g, v) * x * rep_bar(g, g.inverse(w)));
}

bool is_unitriangular(const Matrix& x) {
  if (x.rows() != x.cols()) return false;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    if (x(i, i) != 1) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (x(i, j) != 0) return false;
  }
  return true;
}

bool is_lower_triangular(const Matrix& x) {
  if (x.rows() != x.cols()) return false;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = i + 1; j < x.cols(); ++j)
      if (x(i, j) != 0) return false;
  return true;
}

std::vector<MinorSpec> o_minors(const WeylGroup& g, const WeylElement& v, const WeylElement& w) {
  std::vector<MinorSpec> out;
  auto vi = g.inverse(v), wi = g.inverse(w);
  for (int i = 0; i < g.rank(); ++i) out.push_back(minor_spec(g, vi, wi, i));
  return out;
}

bool in_O(const WeylGroup& g, const WeylElement& v, const WeylElement& w, const Matrix& x) {
  for (const auto& m : o_minors(g, v, w))
    if (minor(x, m) == 0) return false;
  return true;
}

namespace {

// Unitriangular and supported on pairs (a<b) with sigma(a) > sigma(b) (inverted) or < (not inverted).
bool supported_on(const WeylGroup& g, const WeylElement& w, const Matrix& x, bool inverted) {
  require_type_a(g);
  if (!is_unitriangular(x) || static_cast<int>(x.rows()) != matrix_size(g)) return false;
  auto sigma = one_line(g, w);
  for (std::size_t a = 0; a < x.rows(); ++a)
    for (std::size_t b = a + 1; b < x.cols(); ++b)
      if (x(a, b) != 0 && (sigma[a] > sigma[b]) != inverted) return false;
  return true;
}

Matrix sample_supported(const WeylGroup& g, const WeylElement& w, std::mt19937_64& rng, bool inverted) {
  require_type_a(g);
  const int n = matrix_size(g);
  auto sigma = one_line(g, w);
  std::vector<std::pair<int, int>> positions;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if ((sigma[a] > sigma[b]) == inverted) positions.push_back({a, b});
  std::shuffle(positions.begin(), positions.end(), rng);
  Matrix x = Matrix::identity(n);
  for (auto [a, b] : positions) {
    Matrix e = Matrix::identity(n);
    e(a, b) = random_rational(rng);
    x = x * e;
  }
  return x;
}

}  // namespace

bool in_Nw(const WeylGroup& g, const WeylElement& w, const Matrix& x) { return supported_on(g, w, x, true); }
bool in_Nprime(const WeylGroup& g, const WeylElement& w, const Matrix& x) { return supported_on(g, w, x, false); }

Matrix sample_Nw(const WeylGroup& g, const WeylElement& w, std::mt19937_64& rng) {
  return sample_supported(g, w, rng, true);
}
Matrix sample_Nprime(const WeylGroup& g, const WeylElement& w, std::mt19937_64& rng) {
  return sample_supported(g, w, rng, false);
}

Matrix permutation_matrix(const WeylGroup& g, const WeylElement& w) {
  require_type_a(g);
  auto sigma = one_line(g, w);
  Matrix p(sigma.size(), sigma.size());
  for (std::size_t k = 0; k < sigma.size(); ++k) p(sigma[k] - 1, k) = 1;
  return p;
}

Matrix phi(const WeylGroup& g, const WeylElement& w, const Matrix& n) {
  return rep_barbar(g, w) * n * rep_bar(g, g.inverse(w));
}

WeylElement bruhat_cell(const WeylGroup& g, const Matrix& z) {
  require_type_a(g);
  const int n = matrix_size(g);
  if (static_cast<int>(z.rows()) != n || static_cast<int>(z.cols()) != n)
    throw std::invalid_argument("matrix size does not match the group");
  if (determinant(z) == 0) throw std::invalid_argument("bruhat_cell needs an invertible matrix");
  // r[i][j] = rank of rows {1..i} x cols {j..n}; both invariant under B^- on either side.
  std::vector<std::vector<int>> r(n + 1, std::vector<int>(n + 2, 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) r[i][j] = static_cast<int>(rank(z.block(0, j - 1, i, n - j + 1)));
  std::vector<int> sigma(n, 0);
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i)
      if (r[i][k] - r[i - 1][k] - r[i][k + 1] + r[i - 1][k + 1] == 1) sigma[k - 1] = i;
  return g.from_permutation(sigma);
}

Rational random_rational(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  for (;;) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    if (!nonzero || q != 0) return q;
  }
}

Matrix random_unitriangular(int n, std::mt19937_64& rng) {
  Matrix x = Matrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) x(i, j) = random_rational(rng);
  return x;
}

Matrix random_lower(int n, std::mt19937_64& rng) {
  Matrix x(n, n);
  Rational prod = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) x(i, j) = random_rational(rng);
    if (i + 1 < n) {
      x(i, i) = random_rational(rng, true);
      prod *= x(i, i);
    } else {
      x(i, i) = 1 / prod;
    }
  }
  return x;
}

MinorSpec initial_minor_spec(const Stratum& s, int j) {
  const WeylGroup& g = s.group();
  require_type_a(g);
  if (j < 1 || j > s.r()) throw std::out_of_range("initial variable index out of range");
  Word suffix(s.word().end() - j, s.word().end());
  WeylElement wj = g.from_word(suffix);
  const WeylElement& vj = s.v_sequence()[j];
  return minor_spec(g, g.inverse(vj), g.inverse(wj), s.letter(j));
}

std::vector<std::pair<int, Rational>> initial_cluster_values(const Stratum& s, const Matrix& x) {
  std::vector<std::pair<int, Rational>> out;
  for (int j : s.j_set()) out.push_back({j, minor(x, initial_minor_spec(s, j))});
  return out;
}

Rational plucker(const Matrix& x, const std::vector<int>& cols) {
  MinorSpec m;
  for (std::size_t k = 0; k < cols.size(); ++k) m.rows.push_back(static_cast<int>(k) + 1);
  m.cols = cols;
  std::sort(m.cols.begin(), m.cols.end());
  return minor(x, m);
}

Matrix sample_plucker_stratum(std::mt19937_64& rng, const std::vector<std::vector<int>>& nonzero_plucker) {
  for (;;) {
    Matrix x = random_unitriangular(6, rng);
    x(0, 4) = 0;
    Rational d0 = plucker(x, {3, 4, 5});
    x(0, 4) = 1;
    Rational slope = plucker(x, {3, 4, 5}) - d0;
    if (slope == 0) continue;
    x(0, 4) = -d0 / slope;
    bool ok = true;
    for (const auto& c : nonzero_plucker) ok = ok && plucker(x, c) != 0;
    if (ok) return x;
  }
}

}  // namespace strata
