#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gefstab/rational.hpp"

namespace gefstab {

using Exponents = std::vector<std::uint32_t>;

// Ordered list of ambient variable names shared between polynomials.
using VarList = std::shared_ptr<const std::vector<std::string>>;

VarList make_vars(std::vector<std::string> names);
VarList empty_vars();

// Union of two variable lists: every name of `a` in order, followed by the
// names of `b` that are not in `a`.
VarList merge_vars(const VarList& a, const VarList& b);

// Term order used for storage and printing: ascending total degree, and
// within a degree the lexicographically larger exponent vector first, so
// that x comes before y and 1 + 3*z + z^2 prints constant term first.
struct GradedOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients.
//
// Exponent vectors always have one slot per ambient variable; zero
// coefficients are never stored.  Two polynomials over different variable
// lists compare equal when they agree after embedding into the union.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GradedOrder>;

  Polynomial();
  explicit Polynomial(VarList vars);
  Polynomial(VarList vars, Rational constant);

  static Polynomial variable(const VarList& vars, std::string_view name);
  static Polynomial monomial(const VarList& vars, Exponents exps, Rational coeff = 1);

  const VarList& var_list() const { return vars_; }
  const std::vector<std::string>& vars() const { return *vars_; }
  std::size_t nvars() const { return vars_->size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Exponents& e) const;

  // -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  int degree_in(std::string_view name) const;
  // Smallest total degree of a term; -1 for zero.
  int low_degree() const;

  // Indices of variables that occur with a positive exponent.
  std::vector<std::size_t> used_vars() const;

  // Re-embeds into `target`, which must contain every used variable.
  Polynomial with_vars(const VarList& target) const;

  // Adds c * x^e (in place); removes the term if it cancels.
  void add_term(const Exponents& e, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Replace variable `var` by `value` (which may use other variables).
  Polynomial substitute(std::size_t var, const Polynomial& value) const;

  Rational evaluate(std::span<const Rational> point) const;

  // Coefficient list c_0..c_deg for a polynomial in at most one variable.
  std::vector<Rational> univariate_coefficients() const;

 private:
  VarList vars_;
  TermMap terms_;
};

Polynomial pow(const Polynomial& p, long exponent);

// Exact quotient p / q.  Throws NotDivisible if q does not divide p.
Polynomial divide_exact(const Polynomial& p, const Polynomial& q);

// Returns the quotient when q divides p exactly.
bool divides(const Polynomial& q, const Polynomial& p, Polynomial* quotient = nullptr);

// Monic gcd of two polynomials in (at most) the same single variable.
Polynomial gcd_univariate(const Polynomial& p, const Polynomial& q);

// Scales p so its leading (highest degree) coefficient is 1.
Polynomial make_monic(const Polynomial& p);

std::string format_canonical(const Polynomial& p);

// Parses an expression of the polynomial grammar into canonical form.
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nonneg-int)?
//   base   := rational | var | '(' expr ')'
//   rational := int ('/' posint)?
Polynomial parse_poly(std::string_view text, const VarList& vars);
Polynomial parse_poly(std::string_view text, const std::vector<std::string>& vars);

struct ParsedFraction {
  Polynomial num;
  Polynomial den;
};

// "expr" or "expr / factor".  The denominator is a single factor, so a
// compound denominator must be parenthesized: "(1-z^3)/(1-z^2)".
ParsedFraction parse_fraction(std::string_view text, const VarList& vars);

}  // namespace gefstab
