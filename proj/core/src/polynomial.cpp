#include "gefstab/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gefstab/error.hpp"

namespace gefstab {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_string(std::string_view text) {
  Rational q;
  if (q.set_str(std::string(text), 10) != 0) {
    throw InputError("invalid rational '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

VarList make_vars(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

VarList empty_vars() {
  static const VarList empty = make_vars({});
  return empty;
}

namespace {

bool same_vars(const VarList& a, const VarList& b) { return a == b || *a == *b; }

std::uint32_t degree_of(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

// Maps every slot of `from` to its position in `to`.
std::vector<std::size_t> slot_map(const VarList& from, const VarList& to) {
  std::vector<std::size_t> map(from->size());
  for (std::size_t i = 0; i < from->size(); ++i) {
    auto it = std::find(to->begin(), to->end(), (*from)[i]);
    map[i] = it == to->end() ? to->size() : static_cast<std::size_t>(it - to->begin());
  }
  return map;
}

}  // namespace

VarList merge_vars(const VarList& a, const VarList& b) {
  if (same_vars(a, b) || b->empty()) return a;
  if (a->empty()) return b;
  std::vector<std::string> out = *a;
  bool grew = false;
  for (const auto& name : *b) {
    if (std::find(out.begin(), out.end(), name) == out.end()) {
      out.push_back(name);
      grew = true;
    }
  }
  return grew ? make_vars(std::move(out)) : a;
}

bool GradedOrder::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = degree_of(a);
  const auto db = degree_of(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial::Polynomial() : vars_(empty_vars()) {}

Polynomial::Polynomial(VarList vars) : vars_(std::move(vars)) {}

Polynomial::Polynomial(VarList vars, Rational constant) : vars_(std::move(vars)) {
  if (!gefstab::is_zero(constant)) terms_.emplace(Exponents(vars_->size(), 0), std::move(constant));
}

Polynomial Polynomial::variable(const VarList& vars, std::string_view name) {
  auto it = std::find(vars->begin(), vars->end(), name);
  if (it == vars->end()) throw UnknownVariable("unknown variable '" + std::string(name) + "'");
  Exponents e(vars->size(), 0);
  e[static_cast<std::size_t>(it - vars->begin())] = 1;
  return monomial(vars, std::move(e));
}

Polynomial Polynomial::monomial(const VarList& vars, Exponents exps, Rational coeff) {
  Polynomial p(vars);
  if (!gefstab::is_zero(coeff)) p.terms_.emplace(std::move(exps), std::move(coeff));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_term() const {
  if (terms_.empty()) return 0;
  const auto& [e, c] = *terms_.begin();
  return degree_of(e) == 0 ? c : Rational(0);
}

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(degree_of(terms_.rbegin()->first));
}

int Polynomial::low_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(degree_of(terms_.begin()->first));
}

int Polynomial::degree_in(std::size_t var) const {
  if (terms_.empty()) return -1;
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return static_cast<int>(d);
}

int Polynomial::degree_in(std::string_view name) const {
  auto it = std::find(vars_->begin(), vars_->end(), name);
  if (it == vars_->end()) return terms_.empty() ? -1 : 0;
  return degree_in(static_cast<std::size_t>(it - vars_->begin()));
}

std::vector<std::size_t> Polynomial::used_vars() const {
  std::vector<bool> used(nvars(), false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] > 0;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (used[i]) out.push_back(i);
  }
  return out;
}

Polynomial Polynomial::with_vars(const VarList& target) const {
  if (same_vars(vars_, target)) {
    Polynomial out = *this;
    out.vars_ = target;
    return out;
  }
  const auto map = slot_map(vars_, target);
  Polynomial out(target);
  for (const auto& [e, c] : terms_) {
    Exponents f(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (map[i] == target->size()) {
        throw UnknownVariable("variable '" + (*vars_)[i] + "' is not in the target variable list");
      }
      f[map[i]] = e[i];
    }
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (gefstab::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (gefstab::is_zero(it->second)) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (!same_vars(vars_, o.vars_)) {
    auto merged = merge_vars(vars_, o.vars_);
    *this = with_vars(merged);
    Polynomial rhs = o.with_vars(merged);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (!same_vars(a.vars_, b.vars_)) {
    auto merged = merge_vars(a.vars_, b.vars_);
    return a.with_vars(merged) * b.with_vars(merged);
  }
  Polynomial out(a.vars_);
  if (a.is_zero() || b.is_zero()) return out;
  const std::size_t n = a.nvars();
  Exponents e(n);
  Rational c;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      c = ca * cb;
      out.add_term(e, c);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (gefstab::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (same_vars(a.vars_, b.vars_)) return a.terms_ == b.terms_;
  auto merged = merge_vars(a.vars_, b.vars_);
  return a.with_vars(merged).terms_ == b.with_vars(merged).terms_;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  auto target = merge_vars(vars_, value.var_list());
  Polynomial v = value.with_vars(target);
  Polynomial out(target);
  std::vector<Polynomial> powers{Polynomial(target, 1)};
  const auto map = slot_map(vars_, target);
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[var]) powers.push_back(powers.back() * v);
    Exponents rest(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != var) rest[map[i]] = e[i];
    }
    out += Polynomial::monomial(target, std::move(rest), c) * powers[e[var]];
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars()) throw InputError("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

std::vector<Rational> Polynomial::univariate_coefficients() const {
  const auto used = used_vars();
  if (used.size() > 1) throw InputError("polynomial is not univariate: " + format_canonical(*this));
  std::vector<Rational> out(static_cast<std::size_t>(std::max(total_degree(), 0)) + 1, Rational(0));
  if (terms_.empty()) return {Rational(0)};
  for (const auto& [e, c] : terms_) out[degree_of(e)] = c;
  return out;
}

Polynomial pow(const Polynomial& p, long exponent) {
  if (exponent < 0) throw InputError("negative exponent in pow");
  Polynomial result(p.var_list(), 1);
  Polynomial base = p;
  auto k = static_cast<unsigned long>(exponent);
  while (k > 0) {
    if (k & 1UL) result *= base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

namespace {

// Lex-largest exponent vector of a nonzero polynomial.
const Exponents& lex_leading(const Polynomial& p) {
  const Exponents* best = nullptr;
  for (const auto& [e, c] : p.terms()) {
    if (best == nullptr || std::lexicographical_compare(best->begin(), best->end(), e.begin(), e.end())) {
      best = &e;
    }
  }
  return *best;
}

}  // namespace

bool divides(const Polynomial& q, const Polynomial& p, Polynomial* quotient) {
  if (q.is_zero()) throw InputError("division by the zero polynomial");
  auto vars = merge_vars(p.var_list(), q.var_list());
  Polynomial rem = p.with_vars(vars);
  const Polynomial div = q.with_vars(vars);
  const Exponents lead = lex_leading(div);
  const Rational lead_c = div.coefficient(lead);
  Polynomial quo(vars);
  const std::size_t n = vars->size();
  // Single-divisor division: {q} is a Groebner basis, so p is divisible
  // iff every leading term of the running remainder is divisible by LT(q).
  while (!rem.is_zero()) {
    const Exponents& e = lex_leading(rem);
    Exponents shift(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] < lead[i]) return false;
      shift[i] = e[i] - lead[i];
    }
    Rational c = rem.coefficient(e) / lead_c;
    Polynomial t = Polynomial::monomial(vars, shift, c);
    quo += t;
    rem -= t * div;
  }
  if (quotient != nullptr) *quotient = std::move(quo);
  return true;
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& q) {
  Polynomial h;
  if (!divides(q, p, &h)) {
    throw NotDivisible(format_canonical(q) + " does not divide " + format_canonical(p));
  }
  return h;
}

Polynomial make_monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  const auto used = p.used_vars();
  if (used.size() > 1) throw InputError("make_monic expects a univariate polynomial");
  Rational lead = p.terms().rbegin()->second;
  Polynomial out = p;
  out *= Rational(1) / lead;
  return out;
}

namespace {

// Remainder of univariate division a mod b, both in the same variable.
Polynomial univariate_rem(Polynomial a, const Polynomial& b) {
  const int db = b.total_degree();
  const Rational lead_b = b.terms().rbegin()->second;
  const auto& lead_e = b.terms().rbegin()->first;
  while (!a.is_zero() && a.total_degree() >= db) {
    const auto& [ea, ca] = *a.terms().rbegin();
    Exponents shift(ea.size());
    for (std::size_t i = 0; i < ea.size(); ++i) shift[i] = ea[i] - lead_e[i];
    a -= Polynomial::monomial(a.var_list(), shift, ca / lead_b) * b;
  }
  return a;
}

}  // namespace

Polynomial gcd_univariate(const Polynomial& p, const Polynomial& q) {
  auto vars = merge_vars(p.var_list(), q.var_list());
  Polynomial a = p.with_vars(vars);
  Polynomial b = q.with_vars(vars);
  auto ua = a.used_vars();
  auto ub = b.used_vars();
  if (ua.size() > 1 || ub.size() > 1 || (ua.size() == 1 && ub.size() == 1 && ua != ub)) {
    throw InputError("gcd_univariate: inputs are not univariate in a common variable");
  }
  if (a.is_zero() && b.is_zero()) throw InputError("gcd_univariate: both arguments are zero");
  while (!b.is_zero()) {
    Polynomial r = univariate_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

namespace {

void append_monomial(std::ostringstream& os, const Polynomial& p, const Exponents& e) {
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << p.vars()[i];
    if (e[i] > 1) os << '^' << e[i];
  }
}

}  // namespace

std::string format_canonical(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (degree_of(e) == 0) {
      os << to_string(mag);
    } else {
      if (mag != 1) os << to_string(mag) << '*';
      append_monomial(os, p, e);
    }
  }
  return os.str();
}

}  // namespace gefstab
