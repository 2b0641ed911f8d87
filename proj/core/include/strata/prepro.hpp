#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "strata/linalg.hpp"
#include "strata/weyl.hpp"

namespace strata {

// Arrow of the double quiver. Each edge {i < j} of the Dynkin diagram gives
// a: i -> j (sign +1) and a*: j -> i (sign -1).
struct Arrow {
  int source;
  int target;
  int edge;
  bool star;
  int sign;
  int reverse;  // index of the opposite arrow
};

class DoubleQuiver {
 public:
  explicit DoubleQuiver(const DynkinDiagram& diagram);

  const DynkinDiagram& diagram() const { return diagram_; }
  int vertex_count() const { return diagram_.rank(); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<int>& arrows_from(int v) const { return out_[v]; }
  const std::vector<int>& arrows_to(int v) const { return in_[v]; }
  // Symmetric bilinear form (d, e) = sum 2 d_i e_i - sum_edges (d_i e_j + d_j e_i).
  long long bilinear(const std::vector<std::size_t>& d, const std::vector<std::size_t>& e) const;

 private:
  DynkinDiagram diagram_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> out_, in_;
};

using QuiverPtr = std::shared_ptr<const DoubleQuiver>;

// Finite-dimensional representation of the double quiver. maps()[a] has
// shape dim(target) x dim(source).
class Module {
 public:
  Module() = default;
  Module(QuiverPtr quiver, std::vector<std::size_t> dims, std::vector<Matrix> maps);

  static Module zero(QuiverPtr quiver);
  static Module simple(QuiverPtr quiver, int i);

  const QuiverPtr& quiver() const { return quiver_; }
  int vertex_count() const { return quiver_->vertex_count(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(int v) const { return dims_[v]; }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  const Matrix& map(int a) const { return maps_[a]; }
  const std::vector<Matrix>& maps() const { return maps_; }

  // Preprojective relations sum_{t(a)=i} sign(a) M_a M_{a*} = 0 at every vertex.
  bool satisfies_relations() const;
  std::string dims_string() const;

 private:
  QuiverPtr quiver_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> maps_;
};

class Preprojective {
 public:
  explicit Preprojective(const DynkinDiagram& diagram);

  const QuiverPtr& quiver() const { return quiver_; }
  const DynkinDiagram& diagram() const { return quiver_->diagram(); }
  int rank() const { return quiver_->vertex_count(); }

  // Indecomposable projective Lambda e_i, built degree by degree.
  const Module& projective(int i) const { return projectives_[i]; }
  // Indecomposable injective with socle S_i (dual of the projective).
  const Module& injective(int i) const { return injectives_[i]; }
  Module injective_sum() const;
  std::size_t dimension() const;

 private:
  QuiverPtr quiver_;
  std::vector<Module> projectives_;
  std::vector<Module> injectives_;
};

// Per-vertex subspaces, each a matrix whose columns are a basis.
struct Submodule {
  std::vector<Matrix> basis;
  std::vector<std::size_t> dims() const;
  std::size_t total_dim() const;
};

// A module homomorphism: one matrix per vertex, shape dim N_v x dim M_v.
using Hom = std::vector<Matrix>;

Submodule whole_submodule(const Module& m);
Submodule zero_submodule(const Module& m);
bool is_submodule(const Module& m, const Submodule& s);
bool same_submodule(const Submodule& a, const Submodule& b);
bool contains_submodule(const Submodule& big, const Submodule& small);
Submodule submodule_sum(const Submodule& a, const Submodule& b);
Submodule submodule_intersection(const Submodule& a, const Submodule& b);
// Smallest submodule containing the given vectors (one matrix of columns per vertex).
Submodule generated_submodule(const Module& m, const std::vector<Matrix>& vectors);

struct Restriction {
  Module module;
  Hom inclusion;  // module -> ambient
};
Restriction restrict_to(const Module& m, const Submodule& s);

struct Quotient {
  Module module;
  Hom projection;  // ambient -> module
  Hom section;     // linear (not module) splitting module -> ambient
};
Quotient quotient(const Module& m, const Submodule& s);

Module direct_sum(const Module& a, const Module& b);
Module direct_sum(const std::vector<Module>& parts, const QuiverPtr& quiver);
Module power(const Module& m, std::size_t copies);
Module dual(const Module& m);

Submodule socle_at(const Module& m, int j);
Submodule socle(const Module& m);
// Submodule equal to M away from j and to the sum of images of arrows into j at j.
Submodule radical_at(const Module& m, int j);
Submodule radical(const Module& m);
// X_t = Soc_(j_1, ..., j_t)(X); j_1 is processed first.
Submodule socle_sequence(const Module& m, const std::vector<int>& letters);

Module apply_e(const Module& m, int i);
Module apply_e_dagger(const Module& m, int i);
// E_w for w = s_{j1} ... s_{jm} (printed order): E_{jm} is applied first.
Module apply_e_word(const Module& m, const Word& w);
Module apply_e_dagger_word(const Module& m, const Word& w);

std::vector<Hom> hom_basis(const Module& m, const Module& n);
std::size_t hom_dim(const Module& m, const Module& n);
Hom compose(const Hom& g, const Hom& f);  // g after f
Hom hom_zero(const Module& m, const Module& n);
Hom hom_identity(const Module& m);
Hom hom_combination(const std::vector<Hom>& basis, const std::vector<Rational>& coeffs);
bool hom_is_zero(const Hom& f);
bool is_hom(const Module& m, const Module& n, const Hom& f);
Submodule hom_image(const Hom& f, const Module& target);
Submodule hom_kernel(const Hom& f, const Module& source);
// Flattened coordinates of a homomorphism, vertex by vertex, row-major.
std::vector<Rational> flatten(const Hom& f);

// Sum of images of all homomorphisms G -> X.
Submodule trace_submodule(const Module& g, const Module& x);
// Intersection of kernels of all homomorphisms X -> G.
Submodule reject_submodule(const Module& x, const Module& g);

long long ext1_dim(const Module& m, const Module& n);
bool is_rigid(const Module& m);

// Decomposition into indecomposables grouped by isomorphism class.
struct Summand {
  Module module;
  std::size_t multiplicity;
};
std::vector<Module> indecomposable_summands(const Module& m);
std::vector<Summand> decompose(const Module& m);
bool is_indecomposable(const Module& m);
bool is_isomorphic(const Module& a, const Module& b);

// Basis of the radical of the endomorphism algebra, as coordinates with
// respect to hom_basis(m, m).
Matrix endomorphism_radical(const std::vector<Hom>& endo_basis);

}  // namespace strata
