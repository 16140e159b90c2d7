#include "gefstab/ideal.hpp"

#include <algorithm>

#include "gefstab/error.hpp"

namespace gefstab {

std::shared_ptr<const Presentation> free_presentation(const VarList& vars) {
  auto p = std::make_shared<Presentation>();
  p->vars = vars;
  return p;
}

IdealHandle::IdealHandle(std::shared_ptr<const Presentation> ambient, std::vector<Polynomial> generators)
    : ambient_(std::move(ambient)), cache_(std::make_shared<Cache>()) {
  if (!ambient_ || ambient_->vars->empty()) throw InputError("ideal needs a nonempty ambient variable list");
  for (auto& g : generators) {
    if (!g.is_zero()) gens_.push_back(g.with_vars(ambient_->vars));
  }
}

const GroebnerBasis& IdealHandle::groebner() const {
  std::call_once(cache_->once, [this] {
    std::vector<Polynomial> all = gens_;
    all.insert(all.end(), ambient_->relations.begin(), ambient_->relations.end());
    cache_->gb = buchberger(all, ambient_->vars, MonomialOrder::grevlex());
  });
  return cache_->gb;
}

Membership ideal_membership(const Polynomial& p, const IdealHandle& I) {
  Membership m;
  const Polynomial q = p.with_vars(I.vars());
  if (q.is_zero()) {
    m.member = true;
    m.witness.assign(I.generators().size(), Polynomial(I.vars()));
    return m;
  }
  std::vector<Polynomial> quotient;
  Polynomial r = I.groebner().normal_form(q, &quotient);
  if (!r.is_zero()) return m;
  m.member = true;
  quotient.resize(I.generators().size(), Polynomial(I.vars()));
  m.witness = std::move(quotient);
  return m;
}

UnitTest is_unit_ideal(const IdealHandle& I) {
  UnitTest t;
  const GroebnerBasis& gb = I.groebner();
  t.basis = gb.basis();
  if (!gb.is_unit()) return t;
  auto m = ideal_membership(Polynomial(I.vars(), 1), I);
  if (!m.member) throw InternalError("unit basis but 1 has a nonzero normal form");
  t.unit = true;
  t.certificate.coefficients = std::move(m.witness);
  if (!verify_certificate(I, t.certificate)) throw InternalError("Bezout certificate does not reduce to 1");
  return t;
}

bool verify_certificate(const IdealHandle& I, const BezoutCertificate& cert) {
  if (cert.coefficients.size() != I.generators().size()) return false;
  Polynomial s(I.vars());
  for (std::size_t i = 0; i < cert.coefficients.size(); ++i) s += cert.coefficients[i] * I.generators()[i];
  s -= Polynomial(I.vars(), 1);
  if (I.ambient().is_free()) return s.is_zero();
  return I.ambient().relation_basis.contains(s);
}

namespace {

std::vector<Polynomial> with_relations(const IdealHandle& I) {
  std::vector<Polynomial> all = I.generators();
  all.insert(all.end(), I.ambient().relations.begin(), I.ambient().relations.end());
  return all;
}

// Generators of (F) ∩ (G) in the free ring over vars.
std::vector<Polynomial> intersect_free(const std::vector<Polynomial>& F, const std::vector<Polynomial>& G,
                                       const VarList& vars) {
  if (F.empty() || G.empty()) return {};
  std::string t = "t";
  while (std::find(vars->begin(), vars->end(), t) != vars->end()) t = "_" + t;
  std::vector<std::string> names{t};
  names.insert(names.end(), vars->begin(), vars->end());
  VarList ext = make_vars(names);
  const Polynomial tv = Polynomial::variable(ext, t);
  const Polynomial one_minus_t = Polynomial(ext, 1) - tv;
  std::vector<Polynomial> gens;
  for (const auto& f : F) gens.push_back(tv * f.with_vars(ext));
  for (const auto& g : G) gens.push_back(one_minus_t * g.with_vars(ext));
  auto out = eliminate_variables(gens, ext, {t});
  for (auto& p : out) p = p.with_vars(vars);
  return out;
}

}  // namespace

IdealHandle colon(const IdealHandle& I, const Polynomial& f) {
  const Polynomial g = f.with_vars(I.vars());
  if (g.is_zero()) throw InputError("colon by zero");
  if (ideal_membership(g, I).member) return IdealHandle(I.ambient_ptr(), {Polynomial(I.vars(), 1)});
  auto inter = intersect_free(with_relations(I), {g}, I.vars());
  std::vector<Polynomial> out;
  for (const auto& h : inter) out.push_back(divide_exact(h, g));
  return IdealHandle(I.ambient_ptr(), std::move(out));
}

IdealHandle intersect(const IdealHandle& I, const IdealHandle& J) {
  if (I.ambient_ptr() != J.ambient_ptr() && *I.vars() != *J.vars()) {
    throw InputError("intersect: ideals live in different rings");
  }
  if (I.groebner().is_unit()) return J;
  if (J.groebner().is_unit()) return I;
  return IdealHandle(I.ambient_ptr(), intersect_free(with_relations(I), with_relations(J), I.vars()));
}

IdealHandle eliminate(const IdealHandle& I, const std::vector<std::string>& drop) {
  for (const auto& d : drop) {
    if (std::find(I.vars()->begin(), I.vars()->end(), d) == I.vars()->end()) {
      throw InputError("eliminate: unknown variable " + d);
    }
  }
  std::vector<std::string> keep;
  for (const auto& v : *I.vars()) {
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) keep.push_back(v);
  }
  if (keep.empty()) throw InputError("eliminate: no variables would remain");
  auto gens = eliminate_variables(with_relations(I), I.vars(), drop);
  VarList kv = make_vars(keep);
  for (auto& g : gens) g = g.with_vars(kv);
  return IdealHandle(free_presentation(kv), std::move(gens));
}

bool ideal_contains(const IdealHandle& I, const IdealHandle& J) {
  return std::all_of(J.generators().begin(), J.generators().end(),
                     [&](const Polynomial& g) { return ideal_membership(g, I).member; });
}

bool ideals_equal(const IdealHandle& I, const IdealHandle& J) { return ideal_contains(I, J) && ideal_contains(J, I); }

std::vector<Polynomial> essential_generators(const IdealHandle& I) {
  std::vector<Polynomial> out;
  for (const auto& g : I.groebner().basis()) {
    if (!I.ambient().is_free() && I.ambient().relation_basis.contains(g)) continue;
    out.push_back(g);
  }
  return out;
}

}  // namespace gefstab
