#include "gefstab/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gefstab/error.hpp"
#include "gefstab/linsolve.hpp"

namespace gefstab {

struct RingModel::Data {
  Kind kind;
  ZMode z_mode;
  VarList vars;
  std::vector<std::uint32_t> generators;
  std::uint32_t conductor = 0;
  std::vector<bool> semigroup;  // membership for 0..conductor
  std::shared_ptr<const Presentation> presentation;
};

namespace {

std::vector<std::string> presentation_names(std::size_t k, const std::string& avoid) {
  static const char* short_names[] = {"u", "v", "w"};
  std::vector<std::string> names;
  bool clash = false;
  if (k <= 3) {
    for (std::size_t i = 0; i < k; ++i) {
      names.emplace_back(short_names[i]);
      clash = clash || names.back() == avoid;
    }
    if (!clash) return names;
  }
  names.clear();
  for (std::size_t i = 0; i < k; ++i) names.push_back("u" + std::to_string(i + 1));
  if (std::find(names.begin(), names.end(), avoid) != names.end()) {
    for (auto& n : names) n = "_" + n;
  }
  return names;
}

std::shared_ptr<const Presentation> build_subalgebra_presentation(const std::string& z,
                                                                  const std::vector<std::uint32_t>& gens) {
  auto pres = std::make_shared<Presentation>();
  pres->delay_var = z;
  pres->exponents = gens;
  auto names = presentation_names(gens.size(), z);
  pres->vars = make_vars(names);
  std::vector<std::string> lift_names{z};
  lift_names.insert(lift_names.end(), names.begin(), names.end());
  pres->lift_vars = make_vars(lift_names);

  std::vector<Polynomial> ideal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Exponents ez(lift_names.size(), 0);
    ez[0] = gens[i];
    ideal.push_back(Polynomial::variable(pres->lift_vars, names[i]) - Polynomial::monomial(pres->lift_vars, ez));
  }
  pres->lift_basis = buchberger(ideal, pres->lift_vars, MonomialOrder::elimination(1));
  for (const auto& g : pres->lift_basis.basis()) {
    if (g.degree_in(std::size_t{0}) == 0) pres->relations.push_back(g.with_vars(pres->vars));
  }
  if (!pres->relations.empty()) {
    pres->relation_basis = buchberger(pres->relations, pres->vars, MonomialOrder::grevlex());
  }
  return pres;
}

}  // namespace

RingModel RingModel::polynomial_ring(std::vector<std::string> vars, ZMode z_mode) {
  if (vars.empty()) throw InputError("polynomial ring needs at least one variable");
  auto sorted = vars;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("duplicate ring variable");
  }
  auto data = std::make_shared<Data>();
  data->kind = Kind::FullPolynomialRing;
  data->z_mode = z_mode;
  data->vars = make_vars(vars);
  auto pres = std::make_shared<Presentation>();
  pres->vars = data->vars;
  data->presentation = std::move(pres);
  RingModel r;
  r.data_ = std::move(data);
  return r;
}

RingModel RingModel::monomial_subalgebra(std::string delay_var, std::vector<std::uint32_t> generators,
                                         ZMode z_mode) {
  if (delay_var.empty()) throw InputError("empty delay variable name");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  if (generators.empty()) throw InputError("monomial subalgebra needs at least one exponent generator");
  const bool full = generators.size() == 1 && generators[0] == 1;
  if (!full) {
    std::uint32_t g = 0;
    for (auto e : generators) {
      if (e < 2) throw InputError("exponent generators must be {1} or all >= 2");
      g = std::gcd(g, e);
    }
    if (g != 1) throw InputError("exponent generators must have gcd 1");
  }
  auto data = std::make_shared<Data>();
  data->kind = Kind::MonomialSubalgebra;
  data->z_mode = z_mode;
  data->vars = make_vars({delay_var});
  data->generators = generators;

  // Frobenius number is below e_1 * e_k, so a table of that size decides
  // every gap.
  const std::size_t bound = static_cast<std::size_t>(generators.front()) * generators.back() + 1;
  std::vector<bool> in(bound + 1, false);
  in[0] = true;
  for (std::size_t k = 1; k <= bound; ++k) {
    for (auto e : generators) {
      if (e <= k && in[k - e]) {
        in[k] = true;
        break;
      }
    }
  }
  std::uint32_t conductor = 0;
  for (std::size_t k = 0; k <= bound; ++k) {
    if (!in[k]) conductor = static_cast<std::uint32_t>(k + 1);
  }
  data->conductor = conductor;
  in.resize(conductor + 1);
  data->semigroup = std::move(in);
  data->presentation = build_subalgebra_presentation(delay_var, generators);
  RingModel r;
  r.data_ = std::move(data);
  return r;
}

RingModel::Kind RingModel::kind() const { return data_->kind; }
ZMode RingModel::z_mode() const { return data_->z_mode; }
const VarList& RingModel::vars() const { return data_->vars; }
const std::vector<std::uint32_t>& RingModel::generators() const { return data_->generators; }
std::uint32_t RingModel::conductor() const { return data_->conductor; }

bool RingModel::in_semigroup(std::uint64_t k) const {
  if (data_->kind == Kind::FullPolynomialRing) return true;
  if (k >= data_->conductor) return true;
  return data_->semigroup[k];
}

const Presentation& RingModel::presentation() const { return *data_->presentation; }
std::shared_ptr<const Presentation> RingModel::presentation_ptr() const { return data_->presentation; }

std::string RingModel::describe() const {
  std::ostringstream os;
  os << "Q[";
  if (kind() == Kind::FullPolynomialRing) {
    for (std::size_t i = 0; i < vars()->size(); ++i) os << (i ? "," : "") << (*vars())[i];
  } else {
    const auto& z = (*vars())[0];
    for (std::size_t i = 0; i < generators().size(); ++i) {
      os << (i ? "," : "") << z;
      if (generators()[i] != 1) os << '^' << generators()[i];
    }
  }
  os << "], Z = " << (z_mode() == ZMode::ZeroIdeal ? "{0}" : "zero constant term");
  return os.str();
}

bool membership(const Polynomial& p, const RingModel& ring) {
  Polynomial q = p.with_vars(ring.vars());
  if (ring.kind() == RingModel::Kind::FullPolynomialRing) return true;
  for (const auto& [e, c] : q.terms()) {
    if (!ring.in_semigroup(e[0])) return false;
  }
  return true;
}

bool in_Z(const Polynomial& a, const RingModel& ring) {
  if (ring.z_mode() == ZMode::ZeroIdeal) return a.is_zero();
  return sgn(a.constant_term()) == 0;
}

Polynomial lift(const Polynomial& a, const RingModel& ring) {
  const Presentation& pres = ring.presentation();
  if (ring.kind() == RingModel::Kind::FullPolynomialRing) return a.with_vars(pres.vars);
  if (!membership(a, ring)) throw InputError("lift: " + format_canonical(a) + " is not in " + ring.describe());
  Polynomial nf = pres.lift_basis.normal_form(a.with_vars(pres.lift_vars));
  if (nf.degree_in(std::size_t{0}) > 0) {
    throw InternalError("lift: normal form still involves the delay variable");
  }
  return nf.with_vars(pres.vars);
}

Polynomial push(const Polynomial& q, const RingModel& ring) {
  const Presentation& pres = ring.presentation();
  if (ring.kind() == RingModel::Kind::FullPolynomialRing) return q.with_vars(ring.vars());
  Polynomial r = q.with_vars(pres.vars);
  Polynomial out(ring.vars());
  const std::size_t k = pres.vars->size();
  for (const auto& [e, c] : r.terms()) {
    std::uint32_t deg = 0;
    for (std::size_t i = 0; i < k; ++i) deg += e[i] * pres.exponents[i];
    out.add_term(Exponents{deg}, c);
  }
  return out;
}

std::optional<Polynomial> unit_search(const std::vector<Polynomial>& polys, const RingModel& ring) {
  const VarList& vars = ring.vars();
  Polynomial one(vars, 1);
  if (std::all_of(polys.begin(), polys.end(), [&](const Polynomial& f) { return membership(f, ring); })) {
    return one;
  }
  if (!ring.univariate()) return std::nullopt;
  std::vector<std::vector<Rational>> coeffs;
  for (const auto& f : polys) coeffs.push_back(f.with_vars(vars).univariate_coefficients());
  std::vector<std::uint32_t> gaps;
  for (std::uint32_t g = 0; g < ring.conductor(); ++g) {
    if (!ring.in_semigroup(g)) gaps.push_back(g);
  }
  auto coeff = [](const std::vector<Rational>& c, std::int64_t k) {
    return k >= 0 && static_cast<std::size_t>(k) < c.size() ? c[static_cast<std::size_t>(k)] : Rational(0);
  };
  // Coefficients of s beyond the largest gap never enter a gap equation,
  // so degree conductor-1 is the last one worth trying.
  const std::uint32_t max_degree = ring.conductor() == 0 ? 0 : ring.conductor() - 1;
  for (std::uint32_t degree = 0; degree <= max_degree; ++degree) {
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (const auto& f : coeffs) {
      for (auto g : gaps) {
        std::vector<Rational> row(degree, Rational(0));
        for (std::uint32_t k = 1; k <= degree; ++k) row[k - 1] = coeff(f, static_cast<std::int64_t>(g) - k);
        rows.push_back(std::move(row));
        rhs.push_back(-coeff(f, g));
      }
    }
    auto sol = solve_linear(std::move(rows), std::move(rhs), degree);
    if (!sol) continue;
    Polynomial s = one;
    for (std::uint32_t k = 1; k <= degree; ++k) s.add_term(Exponents{k}, (*sol)[k - 1]);
    return s;
  }
  return std::nullopt;
}

}  // namespace gefstab
