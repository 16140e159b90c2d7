#include "gefstab/gef.hpp"

#include <future>
#include <map>

#include "gefstab/error.hpp"

namespace gefstab {

PolyMat PlantFraction::T() const {
  const Polynomial zero(ring.vars());
  PolyMat dE(m, m, zero);
  for (std::size_t i = 0; i < m; ++i) dE(i, i) = d;
  return vstack(N, dE);
}

namespace {

// Smallest admissible multiplier putting every entry and d into A \ Z.
std::optional<Polynomial> denominator_multiplier(const std::vector<Polynomial>& polys, const RingModel& ring) {
  if (ring.z_mode() == ZMode::ZeroIdeal) {
    bool inside = std::all_of(polys.begin(), polys.end(), [&](const Polynomial& p) { return membership(p, ring); });
    if (inside) return Polynomial(ring.vars(), 1);
    return Polynomial::monomial(ring.vars(), Exponents{ring.conductor()});
  }
  return unit_search(polys, ring);
}

bool admissible(const PolyMat& N, const Polynomial& d, const RingModel& ring) {
  if (!in_A_minus_Z(d, ring)) return false;
  return std::all_of(N.data().begin(), N.data().end(), [&](const Polynomial& p) { return membership(p, ring); });
}

PlantFraction product_denominator(const FracMat& P, const RingModel& ring);

PlantFraction univariate_denominator(const FracMat& P, const RingModel& ring) {
  const VarList& vars = ring.vars();
  PlantFraction pf{ring, P.cols(), P.rows(), P, PolyMat(P.rows(), P.cols(), Polynomial(vars)), Polynomial(vars, 1)};

  auto build = [&](auto denominator_of, auto numerator_of) {
    Polynomial d(vars, 1);
    for (const auto& x : P.data()) {
      Polynomial q = denominator_of(x);
      Polynomial g = gcd_univariate(d, q);
      d = divide_exact(d, g) * q;
    }
    PolyMat N(P.rows(), P.cols(), Polynomial(vars));
    for (std::size_t i = 0; i < P.rows(); ++i)
      for (std::size_t j = 0; j < P.cols(); ++j) {
        const Fraction& x = P(i, j);
        N(i, j) = numerator_of(x) * divide_exact(d, denominator_of(x));
      }
    return std::pair{N, d};
  };

  auto given = build([&](const Fraction& x) { return x.den().with_vars(vars); },
                     [&](const Fraction& x) { return x.num().with_vars(vars); });
  if (admissible(given.first, given.second, ring)) {
    pf.N = given.first;
    pf.d = given.second;
    return pf;
  }
  auto red = build([&](const Fraction& x) { return x.reduced().den().with_vars(vars); },
                   [&](const Fraction& x) { return x.reduced().num().with_vars(vars); });
  Polynomial d = red.second;
  PolyMat N = red.first;
  if (ring.z_mode() == ZMode::ZeroConstantTerm) {
    if (sgn(d.constant_term()) == 0) throw NotCausal("plant has no causal scalar denominator");
    const Rational c = Rational(1) / d.constant_term();
    d *= c;
    N = N.map([&](const Polynomial& p) { return p * c; });
  }
  std::vector<Polynomial> polys{d};
  polys.insert(polys.end(), N.data().begin(), N.data().end());
  auto s = denominator_multiplier(polys, ring);
  if (!s) return product_denominator(P, ring);
  pf.d = d * *s;
  pf.N = N.map([&](const Polynomial& p) { return p * *s; });
  if (!admissible(pf.N, pf.d, ring)) throw InternalError("scalar denominator search returned an inadmissible pair");
  return pf;
}

PlantFraction product_denominator(const FracMat& P, const RingModel& ring) {
  const VarList& vars = ring.vars();
  std::vector<std::pair<Polynomial, Polynomial>> reps;
  for (const auto& x : P.data()) {
    Polynomial num = x.num().with_vars(vars), den = x.den().with_vars(vars);
    if (!in_A_minus_Z(den, ring) || !membership(num, ring)) {
      auto r = causal_representation(x, ring);
      if (!r) throw NotCausal("entry " + format_fraction(x) + " is not causal");
      num = r->first;
      den = r->second;
    }
    Rational c = den.terms().rbegin()->second;
    reps.emplace_back(num * (1 / c), den * (1 / c));
  }
  Polynomial d(vars, 1);
  std::vector<Polynomial> distinct;
  for (const auto& [num, den] : reps) {
    if (den.is_constant()) continue;
    if (std::find(distinct.begin(), distinct.end(), den) == distinct.end()) {
      distinct.push_back(den);
      d *= den;
    }
  }
  PolyMat N(P.rows(), P.cols(), Polynomial(vars));
  for (std::size_t k = 0; k < reps.size(); ++k) {
    const auto& [num, den] = reps[k];
    N(k / P.cols(), k % P.cols()) = num * divide_exact(d, den);
  }
  if (!admissible(N, d, ring)) throw NotCausal("plant has no causal scalar denominator");
  return PlantFraction{ring, P.cols(), P.rows(), P, N, d};
}

}  // namespace

PlantFraction scalar_denominator(const FracMat& P, const RingModel& ring) {
  if (P.rows() == 0 || P.cols() == 0) throw InputError("plant must have at least one input and one output");
  for (const auto& x : P.data()) {
    if (!causal(x, ring)) throw NotCausal("entry " + format_fraction(x) + " is not causal over " + ring.describe());
  }
  return ring.univariate() ? univariate_denominator(P, ring) : product_denominator(P, ring);
}

PlantFraction plant_from_fraction(const PolyMat& N, const Polynomial& d, const RingModel& ring) {
  const VarList& vars = ring.vars();
  PolyMat Nv = N.map([&](const Polynomial& p) { return p.with_vars(vars); });
  Polynomial dv = d.with_vars(vars);
  if (!admissible(Nv, dv, ring)) throw InputError("(N, d) is not a causal fraction over " + ring.describe());
  FracMat P = Nv.map([&](const Polynomial& p) { return Fraction(p, dv); });
  return PlantFraction{ring, N.cols(), N.rows(), P, Nv, dv};
}

IdealHandle lift_ideal(const std::vector<Polynomial>& elements, const RingModel& ring) {
  std::vector<Polynomial> lifted;
  for (const auto& e : elements) lifted.push_back(lift(e, ring));
  return IdealHandle(ring.presentation_ptr(), std::move(lifted));
}

namespace {

GefEntry compute_entry(const PlantFraction& pf, const PolyMat& T, const IndexSet& I) {
  const RingModel& ring = pf.ring;
  GefEntry e{I, Polynomial(ring.vars()), false, PolyMat(), IdealHandle(ring.presentation_ptr(), {}), {}};
  PolyMat DT = rows_of(T, I);
  e.delta = det(DT);
  if (e.delta.is_zero()) {
    e.singular = true;
    return e;
  }
  e.C = T * adjugate(DT);
  const IdealHandle base = lift_ideal({e.delta}, ring);
  IdealHandle acc(ring.presentation_ptr(), {Polynomial(ring.presentation().vars, 1)});
  std::map<std::string, bool> seen;
  for (const auto& c : e.C.data()) {
    if (c.is_zero()) continue;
    if (!seen.emplace(format_canonical(c), true).second) continue;
    Polynomial q;
    if (divides(e.delta, c, &q) && membership(q, ring)) continue;
    acc = intersect(acc, colon(base, lift(c, ring)));
  }
  e.ideal = acc;
  for (const auto& g : essential_generators(acc)) {
    Polynomial a = push(g, ring);
    if (a.is_zero()) continue;
    if (std::find(e.generators.begin(), e.generators.end(), a) == e.generators.end()) e.generators.push_back(a);
  }
  for (const auto& g : e.generators) gef_K(pf, e, g);
  return e;
}

}  // namespace

GefResult gef(const PlantFraction& pf, bool parallel) {
  const PolyMat T = pf.T();
  const auto sets = enumerate_index_sets(pf.m, pf.n);
  GefResult r;
  if (parallel && sets.size() > 1) {
    std::vector<std::future<GefEntry>> jobs;
    for (const auto& I : sets) jobs.push_back(std::async(std::launch::async, compute_entry, std::cref(pf), std::cref(T), I));
    for (auto& j : jobs) r.entries.push_back(j.get());
  } else {
    for (const auto& I : sets) r.entries.push_back(compute_entry(pf, T, I));
  }
  return r;
}

PolyMat gef_K(const PlantFraction& pf, const GefEntry& entry, const Polynomial& lambda) {
  const RingModel& ring = pf.ring;
  if (entry.singular) {
    if (!lambda.is_zero()) throw InputError("nonzero element in a zero factor");
    return PolyMat(pf.m + pf.n, pf.m, Polynomial(ring.vars()));
  }
  const Polynomial l = lambda.with_vars(ring.vars());
  return entry.C.map([&](const Polynomial& c) {
    Polynomial q;
    if (!divides(entry.delta, l * c, &q) || !membership(q, ring)) {
      throw InputError(format_canonical(lambda) + " is not in the factor for " + format_index_set(entry.I));
    }
    return q;
  });
}

LocalFreenessWitness local_freeness_witness(const PlantFraction& pf, const GefEntry& entry, const Polynomial& lambda) {
  if (lambda.is_zero() || entry.singular) throw InputError("witness needs a nonzero element and a nonsingular selection");
  LocalFreenessWitness w{lambda.with_vars(pf.ring.vars()), 1, gef_K(pf, entry, lambda), rows_of(pf.T(), entry.I)};
  PolyMat lhs = pf.T().map([&](const Polynomial& p) { return w.f * p; });
  if (!(lhs == w.K * w.V)) throw InternalError("witness identity f T = K V fails");
  return w;
}

}  // namespace gefstab
