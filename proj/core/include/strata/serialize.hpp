#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "strata/category.hpp"
#include "strata/linalg.hpp"
#include "strata/prepro.hpp"
#include "strata/seed.hpp"
#include "strata/weyl.hpp"

namespace strata {

using nlohmann::json;

class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rationals travel as "p/q" strings ("3" for integers); JSON integers are accepted on input.
std::string rational_to_string(const Rational& q);
Rational rational_from_json(const json& j);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

// {"word": "s1 s2", "permutation": [2, 3, 1]}; the permutation only in type A.
json weyl_to_json(const WeylGroup& g, const WeylElement& w);
// Accepts a word string, a permutation array, or an object with either key.
WeylElement weyl_from_json(const WeylGroup& g, const json& j);

// {dims, arrows: [{from, to, star, matrix}]} with vertices numbered from 1.
json module_to_json(const Module& m);
Module module_from_json(const json& j, const QuiverPtr& quiver);

json tilting_to_json(const ClusterTilting& t);
std::string tilting_to_dot(const ClusterTilting& t);

// {vertices, arrows, variables, initial, lambda, history}.
json seed_to_json(const Seed& s);
Seed seed_from_json(const json& j);
std::string seed_to_dot(const Seed& s);

}  // namespace strata
