#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "strata/category.hpp"
#include "strata/linalg.hpp"
#include "strata/weyl.hpp"

// Type A evaluation layer: points of N are upper unitriangular matrices in SL(n).

namespace strata {

class NotTypeA : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotInG0 : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Row set and column set, 1-based and sorted.
struct MinorSpec {
  std::vector<int> rows, cols;
  bool operator==(const MinorSpec& o) const { return rows == o.rows && cols == o.cols; }
  std::string to_string() const;  // "Delta_{123,256}"
};

Rational minor(const Matrix& x, const MinorSpec& spec);

// u({1..i+1}) for the vertex i (0-based), sorted and 1-based.
std::vector<int> weight_subset(const WeylGroup& g, const WeylElement& u, int i);
// Delta_{u(varpi_i), v(varpi_i)} as a pair of subsets.
MinorSpec minor_spec(const WeylGroup& g, const WeylElement& u, const WeylElement& v, int i);
// Same minor through the representatives: leading (i+1)-minor of barbar(u^{-1}) x bar(v).
Rational generalized_minor(const WeylGroup& g, const WeylElement& u, const WeylElement& v, int i, const Matrix& x);

Matrix rep_bar(const WeylGroup& g, const WeylElement& w);
Matrix rep_barbar(const WeylGroup& g, const WeylElement& w);
// Product of generator matrices along an arbitrary word.
Matrix rep_bar_word(int n, const Word& word);
Matrix rep_barbar_word(int n, const Word& word);

// [z]^+: the unitriangular U with z = L U, L lower triangular.
Matrix gauss_plus(const Matrix& z);
Matrix zeta(const WeylGroup& g, const WeylElement& v, const WeylElement& w, const Matrix& x);

bool is_unitriangular(const Matrix& x);
bool is_lower_triangular(const Matrix& x);
bool in_O(const WeylGroup& g, const WeylElement& v, const WeylElement& w, const Matrix& x);
// The minors Delta_{v^{-1}(varpi_i), w^{-1}(varpi_i)} whose product is D_{v,w}.
std::vector<MinorSpec> o_minors(const WeylGroup& g, const WeylElement& v, const WeylElement& w);
bool in_Nw(const WeylGroup& g, const WeylElement& w, const Matrix& x);
bool in_Nprime(const WeylGroup& g, const WeylElement& w, const Matrix& x);
// Permutation matrix with entry 1 at (sigma(k), k).
Matrix permutation_matrix(const WeylGroup& g, const WeylElement& w);
// phi_w(n) = barbar(w) n bar(w^{-1}).
Matrix phi(const WeylGroup& g, const WeylElement& w, const Matrix& n);

// The w with z in B^- w B^-.
WeylElement bruhat_cell(const WeylGroup& g, const Matrix& z);

// Small random rationals p/q with |p| <= 9, 1 <= q <= 4.
Rational random_rational(std::mt19937_64& rng, bool nonzero = false);
Matrix random_unitriangular(int n, std::mt19937_64& rng);
// Lower triangular with determinant 1.
Matrix random_lower(int n, std::mt19937_64& rng);
Matrix sample_Nw(const WeylGroup& g, const WeylElement& w, std::mt19937_64& rng);
Matrix sample_Nprime(const WeylGroup& g, const WeylElement& w, std::mt19937_64& rng);

// Minor attached to the initial variable x_j, j in J:
// rows v_(j)^{-1}({1..i_j}), cols w_(j)^{-1}({1..i_j}) with w_(j) = s_{i_j} ... s_{i_1}.
MinorSpec initial_minor_spec(const Stratum& s, int j);
std::vector<std::pair<int, Rational>> initial_cluster_values(const Stratum& s, const Matrix& x);

// Delta_{{1..k}, cols}(x), k = |cols|.
Rational plucker(const Matrix& x, const std::vector<int>& cols);

// Random unitriangular 6x6 point with [345] = 0 (entry (1,5) is solved for)
// and every Pluecker coordinate in nonzero_plucker nonzero.
Matrix sample_plucker_stratum(std::mt19937_64& rng, const std::vector<std::vector<int>>& nonzero_plucker);

}  // namespace strata
