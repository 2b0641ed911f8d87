#include "strata/laurent.hpp"

#include <algorithm>
#include <cctype>

namespace strata {

LaurentPoly LaurentPoly::constant(std::size_t nvars, const mpz_class& c) {
  LaurentPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i) {
  Exponent e(nvars, 0);
  e.at(i) = 1;
  return monomial(e);
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const mpz_class& c) {
  LaurentPoly p(e.size());
  p.add_term(e, c);
  return p;
}

void LaurentPoly::add_term(const Exponent& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Laurent polynomials over different variable sets");
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Laurent polynomials over different variable sets");
  LaurentPoly r(nvars_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      Exponent e(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = a[i] + b[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly r = constant(nvars_, 1), base = *this;
  for (; e; e >>= 1) {
    if (e & 1) r = r * base;
    if (e > 1) base = base * base;
  }
  return r;
}

namespace {

void degree_box(const LaurentPoly& p, std::vector<int>& lo, std::vector<int>& hi) {
  const std::size_t n = p.nvars();
  lo.assign(n, 0);
  hi.assign(n, 0);
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = first ? e[i] : std::min(lo[i], e[i]);
      hi[i] = first ? e[i] : std::max(hi[i], e[i]);
    }
    first = false;
  }
}

}  // namespace

// Lex-leading terms multiply, so repeated leading-term division recovers an
// exact quotient. Quotient exponents must lie in the box given by the degree
// ranges of dividend and divisor, which bounds the loop when division is inexact.
LaurentPoly LaurentPoly::divide(const LaurentPoly& d) const {
  if (d.is_zero()) throw InexactDivision("division by the zero polynomial");
  if (nvars_ != d.nvars_) throw std::invalid_argument("Laurent polynomials over different variable sets");
  std::vector<int> alo, ahi, dlo, dhi;
  degree_box(*this, alo, ahi);
  degree_box(d, dlo, dhi);
  LaurentPoly q(nvars_), r = *this;
  const auto& [dlead, dcoef] = *d.terms_.rbegin();
  while (!r.is_zero()) {
    const auto& [rlead, rcoef] = *r.terms_.rbegin();
    if (!mpz_divisible_p(rcoef.get_mpz_t(), dcoef.get_mpz_t())) throw InexactDivision("inexact Laurent division");
    Exponent e(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      e[i] = rlead[i] - dlead[i];
      if (e[i] < alo[i] - dlo[i] || e[i] > ahi[i] - dhi[i]) throw InexactDivision("inexact Laurent division");
    }
    mpz_class c = rcoef / dcoef;
    LaurentPoly t = monomial(e, c);
    q.add_term(e, c);
    r = r - t * d;
  }
  return q;
}

Exponent LaurentPoly::denominator() const {
  Exponent den(nvars_, 0);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i) den[i] = std::max(den[i], -e[i]);
  return den;
}

Rational LaurentPoly::evaluate(const std::vector<Rational>& values) const {
  if (values.size() != nvars_) throw std::invalid_argument("wrong number of values for evaluation");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] < 0 && values[i] == 0) throw std::domain_error("division by zero in variable " + std::to_string(i));
      for (int k = 0; k < std::abs(e[i]); ++k) {
        if (e[i] > 0)
          t *= values[i];
        else
          t /= values[i];
      }
    }
    total += t;
  }
  return total;
}

namespace {

std::string monomial_string(const Exponent& e, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += names[i];
    if (e[i] > 1) s += '^' + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
  if (names.size() != nvars_) throw std::invalid_argument("wrong number of variable names");
  if (terms_.empty()) return "0";
  Exponent den = denominator();
  std::string num;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Exponent e = it->first;
    for (std::size_t i = 0; i < nvars_; ++i) e[i] += den[i];
    std::string mono = monomial_string(e, names);
    mpz_class c = it->second;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      num += negative ? "-" : "";
    else
      num += negative ? " - " : " + ";
    if (mono.empty())
      num += c.get_str();
    else if (c == 1)
      num += mono;
    else
      num += c.get_str() + "*" + mono;
    first = false;
  }
  std::string den_str = monomial_string(den, names);
  if (den_str.empty()) return num;
  int den_factors = 0;
  for (int d : den) den_factors += d > 0;
  if (terms_.size() > 1) num = "(" + num + ")";
  if (den_factors > 1 || den_str.find('^') != std::string::npos) den_str = "(" + den_str + ")";
  return num + "/" + den_str;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& names) : s_(text), names_(names) {}

  LaurentPoly parse() {
    LaurentPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw LaurentParseError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LaurentPoly expr() {
    LaurentPoly p = term();
    for (;;) {
      if (eat('+'))
        p = p + term();
      else if (eat('-'))
        p = p - term();
      else
        return p;
    }
  }

  LaurentPoly term() {
    LaurentPoly p = unary();
    for (;;) {
      if (eat('*')) {
        p = p * unary();
      } else if (eat('/')) {
        LaurentPoly d = unary();
        try {
          p = p.divide(d);
        } catch (const InexactDivision&) {
          fail("quotient is not a Laurent polynomial");
        }
      } else {
        return p;
      }
    }
  }

  LaurentPoly unary() {
    if (eat('-')) return -unary();
    return power();
  }

  LaurentPoly power() {
    LaurentPoly base = atom();
    if (!eat('^')) return base;
    bool negative = eat('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
    if (!negative) return base.pow(e);
    if (!base.is_monomial() || abs(base.terms().begin()->second) != 1) fail("negative power of a non-monomial");
    Exponent exp = base.terms().begin()->first;
    mpz_class c = base.terms().begin()->second;
    for (auto& x : exp) x = -x;
    return LaurentPoly::monomial(exp, c).pow(e);
  }

  LaurentPoly atom() {
    skip();
    if (eat('(')) {
      LaurentPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return LaurentPoly::constant(names_.size(), mpz_class(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view id = s_.substr(start, pos_ - start);
      auto it = std::find(names_.begin(), names_.end(), id);
      if (it == names_.end()) {
        pos_ = start;
        fail("unknown variable '" + std::string(id) + "'");
      }
      return LaurentPoly::variable(names_.size(), static_cast<std::size_t>(it - names_.begin()));
    }
    fail("unexpected character");
  }

  std::string_view s_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, const std::vector<std::string>& names) {
  return Parser(text, names).parse();
}

}  // namespace strata
