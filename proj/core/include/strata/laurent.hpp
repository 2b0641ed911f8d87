#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "strata/linalg.hpp"

namespace strata {

class InexactDivision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LaurentParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Exponent = std::vector<int>;

// Integer Laurent polynomial in a fixed number of variables. Terms are kept
// in a map keyed by exponent vector, zero coefficients never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}
  static LaurentPoly constant(std::size_t nvars, const mpz_class& c);
  static LaurentPoly variable(std::size_t nvars, std::size_t i);
  static LaurentPoly monomial(const Exponent& e, const mpz_class& c = 1);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Exact quotient; throws InexactDivision otherwise.
  LaurentPoly divide(const LaurentPoly& d) const;
  LaurentPoly pow(unsigned e) const;

  // Smallest monomial m (nonnegative exponents) with m * p a polynomial.
  Exponent denominator() const;

  Rational evaluate(const std::vector<Rational>& values) const;

  // "(x3*x8 + x10*x12)/x7" style, using the given variable names.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void add_term(const Exponent& e, const mpz_class& c);

  std::size_t nvars_ = 0;
  std::map<Exponent, mpz_class> terms_;
};

// Inverse of to_string: sums, products, quotients, integer powers and parentheses over the names.
LaurentPoly parse_laurent(std::string_view text, const std::vector<std::string>& names);

}  // namespace strata
