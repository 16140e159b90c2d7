#include "gefstab/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "gefstab/error.hpp"

namespace gefstab {

namespace {

std::uint32_t degree_of(const Exponents& e, std::size_t begin, std::size_t end) {
  std::uint32_t d = 0;
  for (std::size_t i = begin; i < end; ++i) d += e[i];
  return d;
}

// Reverse-lexicographic tie-break of grevlex on [begin, end): a < b when
// the last differing exponent is larger in a.
int revlex_compare(const Exponents& a, const Exponents& b, std::size_t begin, std::size_t end) {
  for (std::size_t i = end; i-- > begin;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

int grevlex_compare(const Exponents& a, const Exponents& b, std::size_t begin, std::size_t end) {
  const auto da = degree_of(a, begin, end);
  const auto db = degree_of(b, begin, end);
  if (da != db) return da < db ? -1 : 1;
  return revlex_compare(a, b, begin, end);
}

}  // namespace

bool MonomialOrder::less(const Exponents& a, const Exponents& b) const {
  switch (kind) {
    case Kind::Lex:
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    case Kind::Grevlex:
      return grevlex_compare(a, b, 0, a.size()) < 0;
    case Kind::BlockElimination: {
      const std::size_t split = std::min(front, a.size());
      int c = grevlex_compare(a, b, 0, split);
      if (c != 0) return c < 0;
      return grevlex_compare(a, b, split, a.size()) < 0;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Sparse representation used inside the engine: terms sorted ascending by
// the active order, so the leading term is back().

namespace {

struct Term {
  Exponents e;
  Rational c;
};

using Sparse = std::vector<Term>;

struct Ctx {
  VarList vars;
  MonomialOrder order;
  std::size_t n;

  bool less(const Exponents& a, const Exponents& b) const { return order.less(a, b); }
};

Sparse to_sparse(const Polynomial& p, const Ctx& ctx) {
  Polynomial q = p.with_vars(ctx.vars);
  Sparse out;
  out.reserve(q.size());
  for (const auto& [e, c] : q.terms()) out.push_back({e, c});
  std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return ctx.less(a.e, b.e); });
  return out;
}

Polynomial to_poly(const Sparse& s, const Ctx& ctx) {
  Polynomial p(ctx.vars);
  for (const auto& t : s) p.add_term(t.e, t.c);
  return p;
}

bool divides_exp(const Exponents& d, const Exponents& e) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > e[i]) return false;
  }
  return true;
}

Exponents sub_exp(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Exponents lcm_exp(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool coprime_exp(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

std::uint32_t total(const Exponents& e) { return degree_of(e, 0, e.size()); }

// a + c * x^shift * b, merged in order.
Sparse axpy(const Sparse& a, const Rational& c, const Exponents& shift, const Sparse& b, const Ctx& ctx) {
  Sparse out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  Exponents e(ctx.n);
  auto shifted = [&](std::size_t k) {
    for (std::size_t v = 0; v < ctx.n; ++v) e[v] = b[k].e[v] + shift[v];
  };
  if (j < b.size()) shifted(j);
  while (i < a.size() || j < b.size()) {
    if (j >= b.size()) {
      out.push_back(a[i++]);
    } else if (i >= a.size() || ctx.less(e, a[i].e)) {
      out.push_back({e, c * b[j].c});
      if (++j < b.size()) shifted(j);
    } else if (ctx.less(a[i].e, e)) {
      out.push_back(a[i++]);
    } else {
      Rational s = a[i].c + c * b[j].c;
      if (sgn(s) != 0) out.push_back({a[i].e, std::move(s)});
      ++i;
      if (++j < b.size()) shifted(j);
    }
  }
  return out;
}

Sparse multiply(const Sparse& a, const Sparse& b, const Ctx& ctx) {
  Sparse out;
  for (const auto& t : a) out = axpy(out, t.c, t.e, b, ctx);
  return out;
}

void scale(Sparse& s, const Rational& c) {
  for (auto& t : s) t.c *= c;
}

struct Elem {
  Sparse p;
  std::vector<Sparse> cof;
  std::uint32_t sugar = 0;
};

// Fully reduces `p` by `basis` (skipping index `skip`), updating `cof` so
// that the invariant  p_before + sum cof_before*f == p_after + sum cof_after*f
// holds with the signs arranged as: p_after = p_before - sum c x^s g_k,
// cof_after = cof_before - sum c x^s cof_k.
void reduce_full(Sparse& p, std::vector<Sparse>* cof, std::uint32_t* sugar, const std::vector<Elem>& basis,
                 const std::vector<std::size_t>& active, std::size_t skip, const Ctx& ctx,
                 bool tail_only = false) {
  Sparse done;  // irreducible terms, collected in descending order
  Sparse cur = std::move(p);
  if (tail_only && !cur.empty()) {
    done.push_back(std::move(cur.back()));
    cur.pop_back();
  }
  while (!cur.empty()) {
    const Term& lt = cur.back();
    const Elem* red = nullptr;
    for (std::size_t k : active) {
      if (k == skip) continue;
      if (divides_exp(basis[k].p.back().e, lt.e)) {
        red = &basis[k];
        break;
      }
    }
    if (red == nullptr) {
      done.push_back(std::move(cur.back()));
      cur.pop_back();
      continue;
    }
    const Term& lg = red->p.back();
    Rational c = -(lt.c / lg.c);
    Exponents shift = sub_exp(lt.e, lg.e);
    if (sugar != nullptr) *sugar = std::max(*sugar, total(shift) + red->sugar);
    if (cof != nullptr) {
      for (std::size_t i = 0; i < cof->size(); ++i) {
        if (!red->cof[i].empty()) (*cof)[i] = axpy((*cof)[i], c, shift, red->cof[i], ctx);
      }
    }
    cur = axpy(cur, c, shift, red->p, ctx);
  }
  std::reverse(done.begin(), done.end());
  p = std::move(done);
}

void make_monic(Elem& g) {
  if (g.p.empty()) return;
  Rational inv = 1 / g.p.back().c;
  if (inv == 1) return;
  scale(g.p, inv);
  for (auto& c : g.cof) scale(c, inv);
}

}  // namespace

struct GroebnerBasis::Impl {
  Ctx ctx;
  std::vector<Polynomial> generators;
  std::vector<Sparse> gen_sparse;
  std::vector<Elem> elems;  // reduced basis, ascending leading monomial
  std::vector<Polynomial> basis;
  std::vector<std::vector<Polynomial>> cofactors;
  GroebnerStats stats;
};

const VarList& GroebnerBasis::vars() const { return impl_->ctx.vars; }
const MonomialOrder& GroebnerBasis::order() const { return impl_->ctx.order; }
const std::vector<Polynomial>& GroebnerBasis::generators() const { return impl_->generators; }
const std::vector<Polynomial>& GroebnerBasis::basis() const { return impl_->basis; }
const std::vector<std::vector<Polynomial>>& GroebnerBasis::cofactors() const { return impl_->cofactors; }
const GroebnerStats& GroebnerBasis::stats() const { return impl_->stats; }

bool GroebnerBasis::is_unit() const {
  return impl_->basis.size() == 1 && impl_->basis[0].is_constant() && !impl_->basis[0].is_zero();
}

Polynomial GroebnerBasis::normal_form(const Polynomial& p, std::vector<Polynomial>* quotient) const {
  const Ctx& ctx = impl_->ctx;
  Sparse s = to_sparse(p, ctx);
  std::vector<std::size_t> active(impl_->elems.size());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;
  if (quotient == nullptr) {
    reduce_full(s, nullptr, nullptr, impl_->elems, active, active.size(), ctx);
    return to_poly(s, ctx);
  }
  std::vector<Sparse> cof(impl_->generators.size());
  reduce_full(s, &cof, nullptr, impl_->elems, active, active.size(), ctx);
  quotient->clear();
  for (auto& c : cof) {
    scale(c, Rational(-1));
    quotient->push_back(to_poly(c, ctx));
  }
  return to_poly(s, ctx);
}

namespace {

struct PairKey {
  std::uint32_t sugar;
  std::size_t j;
  std::size_t i;
  bool operator<(const PairKey& o) const { return std::tie(sugar, j, i) < std::tie(o.sugar, o.j, o.i); }
};

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const VarList& vars,
                         const MonomialOrder& order) {
  if (vars->empty()) throw InputError("buchberger: empty ambient variable list");
  auto impl = std::make_shared<GroebnerBasis::Impl>();
  impl->ctx = Ctx{vars, order, vars->size()};
  const Ctx& ctx = impl->ctx;
  impl->generators.reserve(generators.size());
  for (const auto& g : generators) impl->generators.push_back(g.with_vars(vars));
  const std::size_t ngen = generators.size();
  for (const auto& g : impl->generators) impl->gen_sparse.push_back(to_sparse(g, ctx));

  std::vector<Elem> basis;
  std::set<PairKey> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  GroebnerStats& stats = impl->stats;

  std::vector<std::size_t> active;
  auto add_element = [&](Elem g) {
    make_monic(g);
    const std::size_t idx = basis.size();
    for (std::size_t k : active) {
      const Exponents l = lcm_exp(basis[k].p.back().e, g.p.back().e);
      const std::uint32_t sk = basis[k].sugar + total(l) - total(basis[k].p.back().e);
      const std::uint32_t sg = g.sugar + total(l) - total(g.p.back().e);
      queue.insert({std::max(sk, sg), idx, k});
      pending.insert({k, idx});
    }
    basis.push_back(std::move(g));
    active.push_back(idx);
  };

  for (std::size_t i = 0; i < ngen; ++i) {
    if (impl->gen_sparse[i].empty()) continue;
    Elem g;
    g.p = impl->gen_sparse[i];
    g.cof.assign(ngen, Sparse{});
    g.cof[i] = Sparse{{Exponents(ctx.n, 0), Rational(1)}};
    g.sugar = total(g.p.back().e);
    for (const auto& t : g.p) g.sugar = std::max(g.sugar, total(t.e));
    add_element(std::move(g));
  }

  while (!queue.empty()) {
    const PairKey key = *queue.begin();
    queue.erase(queue.begin());
    const std::size_t i = key.i;
    const std::size_t j = key.j;
    pending.erase({i, j});
    ++stats.pairs_considered;

    const Exponents& li = basis[i].p.back().e;
    const Exponents& lj = basis[j].p.back().e;
    if (coprime_exp(li, lj)) continue;
    const Exponents l = lcm_exp(li, lj);
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (!divides_exp(basis[k].p.back().e, l)) continue;
      if (pending.count({std::min(i, k), std::max(i, k)}) != 0) continue;
      if (pending.count({std::min(j, k), std::max(j, k)}) != 0) continue;
      chain = true;
    }
    if (chain) continue;

    ++stats.pairs_reduced;
    // Basis elements are monic, so S = x^a g_i - x^b g_j.
    const Exponents a = sub_exp(l, li);
    const Exponents b = sub_exp(l, lj);
    Elem s;
    s.p = axpy(axpy(Sparse{}, Rational(1), a, basis[i].p, ctx), Rational(-1), b, basis[j].p, ctx);
    s.cof.assign(ngen, Sparse{});
    for (std::size_t g = 0; g < ngen; ++g) {
      if (!basis[i].cof[g].empty()) s.cof[g] = axpy(s.cof[g], Rational(1), a, basis[i].cof[g], ctx);
      if (!basis[j].cof[g].empty()) s.cof[g] = axpy(s.cof[g], Rational(-1), b, basis[j].cof[g], ctx);
    }
    s.sugar = key.sugar;
    reduce_full(s.p, &s.cof, &s.sugar, basis, active, basis.size(), ctx);
    if (s.p.empty()) {
      ++stats.zero_reductions;
      continue;
    }
    add_element(std::move(s));
  }

  // Minimal basis: drop elements whose leading monomial is divisible by
  // another one's (for equal leading monomials keep the lower index).
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i) continue;
      const Exponents& lk = basis[k].p.back().e;
      const Exponents& left = basis[i].p.back().e;
      if (divides_exp(lk, left) && (lk != left || k < i)) redundant = true;
    }
    if (!redundant) keep.push_back(i);
  }
  for (std::size_t i : keep) {
    reduce_full(basis[i].p, &basis[i].cof, nullptr, basis, keep, i, ctx, /*tail_only=*/true);
    make_monic(basis[i]);
  }
  std::sort(keep.begin(), keep.end(),
            [&](std::size_t x, std::size_t y) { return ctx.less(basis[x].p.back().e, basis[y].p.back().e); });

  for (std::size_t i : keep) impl->elems.push_back(std::move(basis[i]));
  for (const auto& g : impl->elems) {
    // Cofactor soundness: sum_i cof_i * f_i must equal g exactly.
    Sparse check;
    for (std::size_t k = 0; k < ngen; ++k) {
      if (g.cof[k].empty() || impl->gen_sparse[k].empty()) continue;
      Sparse prod = multiply(g.cof[k], impl->gen_sparse[k], ctx);
      check = axpy(check, Rational(1), Exponents(ctx.n, 0), prod, ctx);
    }
    check = axpy(check, Rational(-1), Exponents(ctx.n, 0), g.p, ctx);
    if (!check.empty()) throw InternalError("groebner: cofactor identity failed for a basis element");
    impl->basis.push_back(to_poly(g.p, ctx));
    std::vector<Polynomial> cof;
    cof.reserve(ngen);
    for (const auto& c : g.cof) cof.push_back(to_poly(c, ctx));
    impl->cofactors.push_back(std::move(cof));
  }
  return GroebnerBasis(std::move(impl));
}

bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis, const VarList& vars,
                                    const MonomialOrder& order) {
  Ctx ctx{vars, order, vars->size()};
  std::vector<Elem> elems;
  for (const auto& b : basis) {
    Elem e;
    e.p = to_sparse(b, ctx);
    if (!e.p.empty()) elems.push_back(std::move(e));
  }
  std::vector<std::size_t> all(elems.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      const Term& ti = elems[i].p.back();
      const Term& tj = elems[j].p.back();
      const Exponents l = lcm_exp(ti.e, tj.e);
      Sparse s = axpy(axpy(Sparse{}, 1 / ti.c, sub_exp(l, ti.e), elems[i].p, ctx), -1 / tj.c, sub_exp(l, tj.e),
                      elems[j].p, ctx);
      reduce_full(s, nullptr, nullptr, elems, all, elems.size(), ctx);
      if (!s.empty()) return false;
    }
  }
  return true;
}

std::vector<Polynomial> eliminate_variables(const std::vector<Polynomial>& generators, const VarList& vars,
                                            const std::vector<std::string>& drop) {
  std::vector<std::string> front;
  std::vector<std::string> back;
  for (const auto& v : *vars) {
    if (std::find(drop.begin(), drop.end(), v) != drop.end()) {
      front.push_back(v);
    } else {
      back.push_back(v);
    }
  }
  for (const auto& d : drop) {
    if (std::find(vars->begin(), vars->end(), d) == vars->end()) {
      throw InputError("eliminate: '" + d + "' is not an ambient variable");
    }
  }
  VarList remaining = make_vars(back);
  if (front.empty()) {
    std::vector<Polynomial> out;
    for (const auto& g : generators) {
      if (!g.is_zero()) out.push_back(g.with_vars(remaining));
    }
    return out;
  }
  std::vector<std::string> all = front;
  all.insert(all.end(), back.begin(), back.end());
  VarList ordered = make_vars(all);
  GroebnerBasis gb = buchberger(generators, ordered, MonomialOrder::elimination(front.size()));
  std::vector<Polynomial> out;
  for (const auto& g : gb.basis()) {
    bool free_of_front = true;
    for (const auto& [e, c] : g.terms()) {
      for (std::size_t i = 0; i < front.size(); ++i) free_of_front = free_of_front && e[i] == 0;
    }
    if (free_of_front) out.push_back(g.with_vars(remaining));
  }
  return out;
}

}  // namespace gefstab
