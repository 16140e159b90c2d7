#include "gefstab/synth.hpp"

#include <numeric>

#include "gefstab/error.hpp"

namespace gefstab {

namespace {

// Families larger than this skip the subset search and use every factor.
constexpr std::size_t kSubsetSearchLimit = 12;

struct Family {
  std::vector<std::size_t> entries;  // indices into gef entries
  std::vector<std::size_t> owner;    // generator -> position in entries
  std::vector<Polynomial> gens;      // in A
};

Family family_of(const GefResult& g, const std::vector<std::size_t>& entries) {
  Family f;
  f.entries = entries;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    for (const auto& p : g.entries[entries[k]].generators) {
      f.owner.push_back(k);
      f.gens.push_back(p);
    }
  }
  return f;
}

}  // namespace

StabilizabilityResult stabilizable(const PlantFraction& pf) { return stabilizable(pf, gef(pf)); }

StabilizabilityResult stabilizable(const PlantFraction& pf, GefResult g) {
  const RingModel& ring = pf.ring;
  StabilizabilityResult r;
  r.gef = std::move(g);
  std::vector<std::size_t> nonzero;
  for (std::size_t k = 0; k < r.gef.entries.size(); ++k) {
    if (!r.gef.entries[k].generators.empty()) nonzero.push_back(k);
  }
  Family all = family_of(r.gef, nonzero);
  IdealHandle sum = lift_ideal(all.gens, ring);
  UnitTest full = is_unit_ideal(sum);
  if (!full.unit) {
    for (const auto& b : essential_generators(sum)) r.evidence.push_back(push(b, ring));
    return r;
  }
  r.stabilizable = true;

  Family chosen = all;
  BezoutCertificate cert = full.certificate;
  if (nonzero.size() <= kSubsetSearchLimit) {
    bool found = false;
    for (std::size_t size = 1; size <= nonzero.size() && !found; ++size) {
      for (const auto& pick : combinations(nonzero.size(), size)) {
        std::vector<std::size_t> sub;
        for (auto i : pick) sub.push_back(nonzero[i]);
        Family f = family_of(r.gef, sub);
        UnitTest t = is_unit_ideal(lift_ideal(f.gens, ring));
        if (t.unit) {
          chosen = std::move(f);
          cert = std::move(t.certificate);
          found = true;
          break;
        }
      }
    }
  }

  std::vector<Polynomial> lambda(chosen.entries.size(), Polynomial(ring.vars()));
  for (std::size_t i = 0; i < chosen.gens.size(); ++i) {
    lambda[chosen.owner[i]] += push(cert.coefficients[i], ring) * chosen.gens[i];
  }
  StabilizabilityCertificate c;
  Polynomial total(ring.vars());
  for (std::size_t k = 0; k < chosen.entries.size(); ++k) {
    if (lambda[k].is_zero()) continue;
    const GefEntry& e = r.gef.entries[chosen.entries[k]];
    gef_K(pf, e, lambda[k]);
    c.sharp.push_back(e.I);
    c.lambda.push_back(lambda[k]);
    total += lambda[k];
  }
  if (total != Polynomial(ring.vars(), 1)) throw InternalError("partition of unity does not sum to 1");
  c.omega = 1;
  c.a.assign(c.lambda.size(), Polynomial(ring.vars(), 1));
  r.certificate = std::move(c);
  return r;
}

LocalFactorization local_factorization(const PlantFraction& pf, const GefEntry& entry, const Polynomial& lambda) {
  const RingModel& ring = pf.ring;
  const std::size_t m = pf.m, n = pf.n;
  const Polynomial l = lambda.with_vars(ring.vars());
  if (l.is_zero() || entry.singular) throw InputError("local factorization needs a nonzero element and nonsingular selection");
  LocalFactorization lf;
  lf.I = entry.I;
  lf.lambda = l;
  lf.K = gef_K(pf, entry, l);
  lf.X_sel = selection(entry.I, m, n, ring.vars()).x;
  auto local = [&](const Polynomial& p, unsigned e) { return LocalElem(p, e, l, ring); };
  lf.N = lf.K.block(0, 0, n, m).map([&](const Polynomial& p) { return local(p, 1); });
  lf.D = lf.K.block(n, 0, m, m).map([&](const Polynomial& p) { return local(p, 1); });

  // [lambda^-1 K  X_sel]^-1 = lambda adj(M') / det(M') with M' = [K  lambda X_sel].
  PolyMat Mp = hstack(lf.K, lf.X_sel.map([&](const Polynomial& p) { return l * p; }));
  const Polynomial dM = det(Mp);
  const unsigned size = static_cast<unsigned>(m + n);
  const Polynomial lp = pow(l, size);
  int sign = 0;
  if (dM == lp) sign = 1;
  else if (dM == -lp) sign = -1;
  else throw InternalError("det([K/lambda X]) is not a unit for " + format_index_set(entry.I));
  PolyMat adj = adjugate(Mp);
  LocalMat inv = adj.map([&](const Polynomial& p) { return local(sign > 0 ? p : -p, size - 1); });
  lf.Ytil = inv.block(0, 0, m, n);
  lf.Xtil = inv.block(0, n, m, m);
  if (!bezout_holds(lf)) throw InternalError("local Bezout identity fails for " + format_index_set(entry.I));
  return lf;
}

bool bezout_holds(const LocalFactorization& lf) {
  LocalMat s = lf.Ytil * lf.N + lf.Xtil * lf.D;
  return s == identity_like(s.rows(), s(0, 0));
}

std::vector<Polynomial> partition_powers(const std::vector<Polynomial>& lambda, unsigned omega) {
  if (lambda.empty()) throw InputError("partition_powers needs at least one element");
  if (omega == 0) throw InputError("omega must be positive");
  const std::size_t s = lambda.size();
  const VarList& vars = lambda[0].var_list();
  const unsigned total = static_cast<unsigned>(s) * (omega - 1) + 1;
  std::vector<std::vector<Polynomial>> powers(s);
  for (std::size_t i = 0; i < s; ++i) {
    powers[i].push_back(Polynomial(vars, 1));
    for (unsigned k = 1; k <= total; ++k) powers[i].push_back(powers[i].back() * lambda[i]);
  }
  std::vector<Integer> fact(total + 1, 1);
  for (unsigned k = 1; k <= total; ++k) fact[k] = fact[k - 1] * k;

  std::vector<Polynomial> a(s, Polynomial(vars));
  std::vector<unsigned> k(s, 0);
  // Enumerate compositions of `total` into s parts.
  auto visit = [&](auto&& self, std::size_t pos, unsigned left) -> void {
    if (pos + 1 == s) {
      k[pos] = left;
      std::size_t owner = 0;
      while (k[owner] < omega) ++owner;
      Integer denom = 1;
      for (auto e : k) denom *= fact[e];
      Rational coeff(fact[total], denom);
      coeff.canonicalize();
      Polynomial term(vars, coeff);
      for (std::size_t i = 0; i < s; ++i) term *= powers[i][i == owner ? k[i] - omega : k[i]];
      a[owner] += term;
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      k[pos] = e;
      self(self, pos + 1, left - e);
    }
  };
  visit(visit, 0, total);

  Polynomial check(vars);
  for (std::size_t i = 0; i < s; ++i) check += a[i] * powers[i][omega];
  Polynomial sum(vars);
  for (const auto& l : lambda) sum += l;
  if (sum == Polynomial(vars, 1) && check != Polynomial(vars, 1)) {
    throw InternalError("partition of powers does not sum to 1");
  }
  return a;
}

RepairResult repair_nonsingular(const PolyMat& A, const PolyMat& B, const RingModel& ring) {
  if (!A.square() || A.cols() != B.cols()) throw InputError("repair: A must be square with as many columns as B");
  const std::size_t m = A.rows(), n = B.rows();
  const Polynomial zero(ring.vars()), one(ring.vars(), 1);
  RepairResult r{PolyMat(m, n, zero), det(A), {}, {}};
  if (in_A_minus_Z(r.minor, ring)) return r;
  const PolyMat S = vstack(A, B);
  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    for (const auto& rows : combinations(m + n, m)) {
      std::size_t from_b = 0;
      for (auto i : rows) from_b += i >= m;
      if (from_b != k) continue;
      std::vector<std::size_t> cols(m);
      std::iota(cols.begin(), cols.end(), std::size_t{0});
      Polynomial minor = det(S.pick(rows, cols));
      if (!in_A_minus_Z(minor, ring)) continue;
      std::vector<std::size_t> kept_a;
      for (auto i : rows) {
        if (i < m) kept_a.push_back(i);
        else r.b_rows.push_back(i - m + 1);
      }
      for (std::size_t i = 0; i < m; ++i) {
        if (std::find(kept_a.begin(), kept_a.end(), i) == kept_a.end()) r.a_rows.push_back(i + 1);
      }
      for (std::size_t t = 0; t < k; ++t) r.R(r.a_rows[t] - 1, r.b_rows[t] - 1) = one;
      r.minor = minor;
      if (!z_nonsingular(A + r.R * B, ring)) throw RepairImpossible("A + R B is Z-singular after repair");
      return r;
    }
  }
  throw RepairImpossible("no Z-nonsingular full-size minor of [A; B]");
}

FracMat closed_loop(const FracMat& P, const FracMat& C) {
  const std::size_t n = P.rows(), m = P.cols();
  if (C.rows() != m || C.cols() != n) throw InputError("controller must be m x n for an n x m plant");
  const Fraction& proto = P(0, 0);
  const FracMat En = identity_like(n, proto), Em = identity_like(m, proto);
  const FracMat S = En + P * C;
  const Fraction dS = det(S);
  if (dS.is_zero()) throw IllPosed("det(E + PC) = 0");
  const FracMat Sinv = inverse(S);
  const FracMat Tinv = inverse(Em + C * P);
  const FracMat top = hstack(Sinv, -(P * Tinv));
  const FracMat bottom = hstack(C * Sinv, Tinv);
  return vstack(top, bottom);
}

VerificationReport verify_stabilizing(const FracMat& P, const FracMat& C, const RingModel& ring) {
  VerificationReport v;
  const std::size_t n = P.rows();
  v.det_E_PC = det(identity_like(n, P(0, 0)) + P * C);
  v.H = closed_loop(P, C);
  v.well_posed = true;
  v.stabilizing = true;
  std::vector<Polynomial> stable;
  for (const auto& x : v.H.data()) {
    auto s = stable_element(x, ring);
    v.in_A.push_back(s.has_value());
    v.stabilizing = v.stabilizing && s.has_value();
    stable.push_back(s ? *s : Polynomial(ring.vars()));
  }
  if (v.stabilizing) v.H_stable = PolyMat::from(v.H.rows(), v.H.cols(), std::move(stable));
  return v;
}

namespace {

PolyMat weighted_sum(const std::vector<LocalFactorization>& locals, const StabilizabilityCertificate& c,
                     bool denominator) {
  PolyMat acc;
  for (std::size_t k = 0; k < locals.size(); ++k) {
    const auto& lf = locals[k];
    LocalMat prod = lf.D * (denominator ? lf.Xtil : lf.Ytil);
    PolyMat term = prod.map([&](const LocalElem& x) { return c.a[k] * x.times_f_power(c.omega); });
    acc = k == 0 ? term : acc + term;
  }
  return acc;
}

unsigned required_omega(const std::vector<LocalFactorization>& locals) {
  unsigned omega = 1;
  for (const auto& lf : locals) {
    for (const auto* M : {&lf.Xtil, &lf.Ytil}) {
      for (const auto& x : (lf.D * *M).data()) omega = std::max(omega, x.exp());
    }
  }
  return omega;
}

}  // namespace

ControllerResult synthesize(const PlantFraction& pf) { return synthesize(pf, stabilizable(pf)); }

ControllerResult synthesize(const PlantFraction& pf, const StabilizabilityResult& st) {
  if (!st.stabilizable || !st.certificate) throw NotStabilizable("plant is not stabilizable over " + pf.ring.describe());
  const RingModel& ring = pf.ring;
  const std::size_t m = pf.m, n = pf.n;
  ControllerResult res;
  res.certificate = *st.certificate;
  auto& cert = res.certificate;
  for (std::size_t k = 0; k < cert.sharp.size(); ++k) {
    const GefEntry* e = nullptr;
    for (const auto& x : st.gef.entries)
      if (x.I == cert.sharp[k]) e = &x;
    if (!e) throw InternalError("certificate index set missing from the factor list");
    res.locals.push_back(local_factorization(pf, *e, cert.lambda[k]));
  }
  cert.omega = required_omega(res.locals);
  cert.a = partition_powers(cert.lambda, cert.omega);
  {
    Polynomial check(ring.vars());
    for (std::size_t k = 0; k < cert.a.size(); ++k) check += cert.a[k] * pow(cert.lambda[k], cert.omega);
    if (check != Polynomial(ring.vars(), 1)) throw InternalError("sum a_I lambda_I^omega != 1");
  }
  res.Den = weighted_sum(res.locals, cert, true);
  res.Num = weighted_sum(res.locals, cert, false);

  if (!z_nonsingular(res.Den, ring)) {
    std::size_t k0 = cert.sharp.size();
    for (std::size_t k = 0; k < cert.sharp.size(); ++k) {
      if (in_A_minus_Z(cert.a[k], ring) && in_A_minus_Z(cert.lambda[k], ring)) {
        k0 = k;
        break;
      }
    }
    if (k0 == cert.sharp.size()) throw InternalError("no index set with a_I and lambda_I outside Z");
    auto& lf = res.locals[k0];
    const Polynomial lw = pow(lf.lambda, cert.omega);
    const PolyMat Dw = lf.D.map([&](const LocalElem& x) { return x.times_f_power(cert.omega); });
    const PolyMat Nw = lf.N.map([&](const LocalElem& x) { return x.times_f_power(cert.omega); });
    const PolyMat adjD = adjugate(Dw);
    const Polynomial detD = det(Dw);
    const PolyMat Ntil = Nw * adjD;
    const PolyMat Dtil = scale(detD, identity_like(n, detD));
    const PolyMat B = scale(-(cert.a[k0] * lw * detD), Ntil);
    RepairResult rep = repair_nonsingular(res.Den, B, ring);
    const PolyMat R = scale(lw, adjD) * rep.R;
    auto to_local = [&](const Polynomial& p) { return LocalElem(p, 0, lf.lambda, ring); };
    lf.Xtil = lf.Xtil - (R * Ntil).map(to_local);
    lf.Ytil = lf.Ytil + (R * Dtil).map(to_local);
    if (!bezout_holds(lf)) throw InternalError("Bezout identity fails after repair");
    const PolyMat expected = res.Den + rep.R * B;
    res.Den = weighted_sum(res.locals, cert, true);
    res.Num = weighted_sum(res.locals, cert, false);
    if (!(res.Den == expected)) throw InternalError("repaired denominator differs from A + R'B");
    if (!z_nonsingular(res.Den, ring)) throw InternalError("denominator still Z-singular after repair");
    res.repair_applied = true;
    res.I0 = lf.I;
    res.repair = std::move(rep);
  }

  res.C = inverse(to_fractions(res.Den)) * to_fractions(res.Num);
  res.verification = verify_stabilizing(pf.P, res.C, ring);
  if (!res.verification.stabilizing) throw InternalError("synthesized controller fails verification");
  res.H = res.verification.H_stable;
  const PolyMat H22 = res.H.block(n, n, m, m);
  const PolyMat H21 = res.H.block(n, 0, m, n);
  if (!(H22 == res.Den) || !(H21 == res.Num)) throw InternalError("closed-loop blocks differ from the certificate sums");
  const FracMat H11 = res.verification.H.block(0, 0, n, n);
  const FracMat check = H11 + pf.P * res.verification.H.block(n, 0, m, n);
  if (!(check == identity_like(n, pf.P(0, 0)))) throw InternalError("H11 + P H21 != E");
  return res;
}

bool transpose_duality_check(const FracMat& P, const FracMat& C, const RingModel& ring) {
  const std::size_t n = P.rows(), m = P.cols();
  const Fraction& proto = P(0, 0);
  const FracMat H = closed_loop(P, C);
  const FracMat Ht = closed_loop(P.transpose(), C.transpose());
  const Fraction zero = zero_like(proto), one = one_like(proto);
  FracMat left(n + m, n + m, zero), right(n + m, n + m, zero);
  // [O E_m; E_n O] and [O E_n; E_m O].
  for (std::size_t i = 0; i < m; ++i) left(i, n + i) = one;
  for (std::size_t i = 0; i < n; ++i) left(m + i, i) = one;
  for (std::size_t i = 0; i < n; ++i) right(i, m + i) = one;
  for (std::size_t i = 0; i < m; ++i) right(n + i, i) = one;
  if (!(Ht.transpose() == left * H * right)) return false;
  const bool forward = verify_stabilizing(P, C, ring).stabilizing;
  const bool dual = verify_stabilizing(P.transpose(), C.transpose(), ring).stabilizing;
  return forward == dual;
}

CausalityReport causality_check(const FracMat& P, const FracMat& C, const PolyMat& Den, const RingModel& ring) {
  CausalityReport r;
  r.den_z_nonsingular = z_nonsingular(Den, ring);
  r.entries_causal = std::all_of(C.data().begin(), C.data().end(), [&](const Fraction& x) { return causal(x, ring); });
  r.plant_strictly_causal =
      std::all_of(P.data().begin(), P.data().end(), [&](const Fraction& x) { return strictly_causal(x, ring); });
  r.ok = r.den_z_nonsingular && r.entries_causal;
  return r;
}

CausalityReport causality_check(const PlantFraction& pf, const ControllerResult& result) {
  return causality_check(pf.P, result.C, result.Den, pf.ring);
}

}  // namespace gefstab
