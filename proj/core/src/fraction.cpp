#include "gefstab/fraction.hpp"

#include <algorithm>

#include "gefstab/error.hpp"

namespace gefstab {

Fraction::Fraction() : num_(), den_(empty_vars(), 1) {}

Fraction::Fraction(Polynomial num) : num_(std::move(num)), den_(num_.var_list(), 1) {}

Fraction::Fraction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InputError("fraction with zero denominator");
}

bool Fraction::univariate() const {
  auto vars = merge_vars(num_.var_list(), den_.var_list());
  auto a = num_.with_vars(vars).used_vars();
  auto b = den_.with_vars(vars).used_vars();
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a.size() <= 1;
}

namespace {

Rational leading_coefficient(const Polynomial& p) { return p.terms().rbegin()->second; }

}  // namespace

Fraction Fraction::reduced() const {
  auto vars = merge_vars(num_.var_list(), den_.var_list());
  Polynomial n = num_.with_vars(vars);
  Polynomial d = den_.with_vars(vars);
  if (n.is_zero()) return Fraction(n, Polynomial(vars, 1));
  if (univariate()) {
    Polynomial g = gcd_univariate(n, d);
    if (!g.is_constant()) {
      n = divide_exact(n, g);
      d = divide_exact(d, g);
    }
  } else {
    Polynomial q;
    if (divides(d, n, &q)) {
      n = std::move(q);
      d = Polynomial(vars, 1);
    } else if (divides(n, d, &q)) {
      n = Polynomial(vars, 1);
      d = std::move(q);
    }
  }
  const Rational inv = 1 / leading_coefficient(d);
  n *= inv;
  d *= inv;
  return Fraction(std::move(n), std::move(d));
}

std::optional<Polynomial> Fraction::as_polynomial() const {
  Polynomial q;
  if (divides(den_, num_, &q)) return q;
  return std::nullopt;
}

Fraction Fraction::operator-() const { return Fraction(-num_, den_); }

Fraction operator+(const Fraction& a, const Fraction& b) {
  if (a.den_ == b.den_) return Fraction(a.num_ + b.num_, a.den_).reduced();
  return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_).reduced();
}

Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }

Fraction operator*(const Fraction& a, const Fraction& b) {
  if (a.is_zero() || b.is_zero()) {
    auto vars = merge_vars(a.num_.var_list(), b.num_.var_list());
    return Fraction(Polynomial(vars), Polynomial(vars, 1));
  }
  return Fraction(a.num_ * b.num_, a.den_ * b.den_).reduced();
}

Fraction operator/(const Fraction& a, const Fraction& b) {
  if (b.is_zero()) throw IllPosed("division by the zero fraction");
  return Fraction(a.num_ * b.den_, a.den_ * b.num_).reduced();
}

bool operator==(const Fraction& a, const Fraction& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

std::string format_fraction(const Fraction& x) {
  if (x.den().is_constant()) {
    Polynomial n = x.num();
    n *= Rational(1) / x.den().constant_term();
    return format_canonical(n);
  }
  Polynomial n = x.num(), d = x.den();
  const Rational c = sgn(d.constant_term()) != 0 ? d.constant_term() : leading_coefficient(d);
  n *= 1 / c;
  d *= 1 / c;
  return "(" + format_canonical(n) + ")/(" + format_canonical(d) + ")";
}

namespace {

// Scales so the denominator has constant term 1 when it is nonzero.
std::pair<Polynomial, Polynomial> normalized(Polynomial n, Polynomial d) {
  Rational c = d.constant_term();
  if (sgn(c) != 0 && c != 1) {
    n *= 1 / c;
    d *= 1 / c;
  }
  return {std::move(n), std::move(d)};
}

}  // namespace

std::optional<std::pair<Polynomial, Polynomial>> causal_representation(const Fraction& x,
                                                                        const RingModel& ring) {
  const VarList& vars = ring.vars();
  Polynomial n = x.num().with_vars(vars);
  Polynomial d = x.den().with_vars(vars);
  if (ring.univariate()) {
    Fraction r = Fraction(n, d).reduced();
    n = r.num().with_vars(vars);
    d = r.den().with_vars(vars);
    if (ring.z_mode() == ZMode::ZeroIdeal) {
      // Any z^c with c >= conductor moves both parts into A.
      Polynomial shift = Polynomial::monomial(vars, Exponents{ring.conductor()});
      if (membership(n, ring) && membership(d, ring)) return std::pair{n, d};
      return std::pair{n * shift, d * shift};
    }
    if (sgn(d.constant_term()) == 0) return std::nullopt;
    auto s = unit_search({n, d}, ring);
    if (!s) return std::nullopt;
    return normalized(n * *s, d * *s);
  }
  if (ring.z_mode() == ZMode::ZeroIdeal) return std::pair{n, d};
  if (sgn(d.constant_term()) != 0) return normalized(n, d);
  Polynomial q;
  if (divides(d, n, &q)) return std::pair{q, Polynomial(vars, 1)};
  return std::nullopt;
}

bool causal(const Fraction& x, const RingModel& ring) { return causal_representation(x, ring).has_value(); }

bool strictly_causal(const Fraction& x, const RingModel& ring) {
  auto rep = causal_representation(x, ring);
  return rep && in_Z(rep->first, ring);
}

std::optional<Polynomial> stable_element(const Fraction& x, const RingModel& ring) {
  const VarList& vars = ring.vars();
  Fraction y(x.num().with_vars(vars), x.den().with_vars(vars));
  Polynomial value(vars);
  if (y.univariate()) {
    Fraction r = y.reduced();
    if (!r.den().is_constant()) return std::nullopt;
    value = r.num() * (Rational(1) / r.den().constant_term());
  } else {
    auto q = y.as_polynomial();
    if (!q) return std::nullopt;
    value = *q;
  }
  value = value.with_vars(vars);
  if (!membership(value, ring)) return std::nullopt;
  return value;
}

}  // namespace gefstab
