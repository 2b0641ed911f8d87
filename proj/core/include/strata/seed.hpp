#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strata/category.hpp"
#include "strata/laurent.hpp"

namespace strata {

struct Seed {
  std::vector<int> ids;             // vertex ids, j of U_j for initial seeds
  std::vector<bool> frozen;
  IntMatrix quiver;                 // arrow counts
  std::vector<std::string> names;   // initial variable names, the ring the variables live in
  std::vector<LaurentPoly> variables;
  std::vector<std::string> labels;  // minor label per vertex, empty when unknown
  std::vector<std::string> initial_labels;  // label of each initial variable
  std::optional<IntMatrix> lambda;
  std::vector<int> history;  // ids of mutated vertices; mutating twice in a row cancels

  std::size_t size() const { return ids.size(); }
  std::vector<std::string> variable_strings() const;
  std::size_t mutable_count() const;
};

// Seed whose variables are the initial variables themselves. Throws on inconsistent shapes.
Seed make_seed(std::vector<int> ids, std::vector<bool> frozen, IntMatrix quiver, std::vector<std::string> names,
               std::vector<std::string> labels = {}, std::optional<IntMatrix> lambda = std::nullopt);
// Initial seed of a stratum from its cluster-tilting module: names x_j, minor labels in type A.
Seed initial_seed(const Stratum& s, const ClusterTilting& t);

// b_ij = #(i -> j) - #(j -> i).
IntMatrix exchange_matrix(const IntMatrix& quiver);
IntMatrix quiver_from_exchange(const IntMatrix& b);
// b'_ij = -b_ij if k in {i, j}, else b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2.
IntMatrix mutate_exchange_matrix(const IntMatrix& b, std::size_t k);
// Three-step rule: compose paths through k, reverse arrows at k, cancel 2-cycles.
IntMatrix mutate_quiver_steps(const IntMatrix& q, std::size_t k);
// Lambda' = E^T Lambda E with E = identity except e_kk = -1, e_ik = max(0, -b_ik).
IntMatrix mutate_lambda(const IntMatrix& lambda, const IntMatrix& b, std::size_t k);

class FrozenVertex : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Seed mutate(const Seed& seed, std::size_t k);
// Vertex index with the given id; throws std::out_of_range.
std::size_t vertex_index(const Seed& seed, int id);

// Identity of a seed up to relabelling: variables sorted, adjacency in that order.
std::string seed_key(const Seed& seed);

enum class EnumerationStatus { complete, cap_reached };

struct EnumeratedSeed {
  Seed seed;
  int parent = -1;   // index of the seed it was reached from
  int vertex = -1;   // vertex index mutated to reach it
};

struct MutationClass {
  EnumerationStatus status = EnumerationStatus::complete;
  std::vector<EnumeratedSeed> seeds;
  std::vector<LaurentPoly> variables;  // distinct mutable cluster variables
  std::vector<std::string> variable_strings;
};

constexpr std::size_t default_enumeration_cap = 10000;

MutationClass enumerate_class(const Seed& seed, std::size_t cap = default_enumeration_cap);

// "A3", "A1 x A1", "A0" for no mutable vertices, or "infinite/unknown".
std::string detect_type(const Seed& seed, std::size_t cap = default_enumeration_cap);

struct Compatibility {
  bool compatible = false;
  IntMatrix product;  // B~^T Lambda, one row per mutable vertex
};

// B~ = columns of b at the mutable vertices. Compatible iff B~^T Lambda has a
// positive diagonal at the mutable vertices and zeros elsewhere; Lambda must be skew.
Compatibility check_compatibility(const IntMatrix& b, const std::vector<bool>& frozen, const IntMatrix& lambda);

// Values of all variables given the values of the initial variables (in names order).
std::vector<Rational> evaluate(const Seed& seed, const std::vector<Rational>& initial_values);

}  // namespace strata
