// Runs the thirteen acceptance criteria and prints one line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "gefstab/error.hpp"
#include "gefstab/sim.hpp"
#include "gefstab/synth.hpp"
#include "support/golden.hpp"
#include "support/oracles.hpp"

using namespace gefstab;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Failing conditions are collected rather than thrown so every line prints.
class Check {
 public:
  void operator()(bool cond, const std::string& what) {
    if (!cond && out_.ok) out_.detail = what;
    out_.ok = out_.ok && cond;
  }
  void time_limit(double ms, double limit_ms, const std::string& what) {
    (*this)(ms <= limit_ms, what + " took " + std::to_string(ms) + " ms");
  }
  Outcome outcome() const { return out_; }

 private:
  Outcome out_;
};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

template <class F>
double timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return ms_since(t0);
}

const RingModel& A() { return golden::ring(); }
Polynomial one() { return Polynomial(A().vars(), 1); }

Fraction F(const RingModel& R, const char* s) {
  auto p = parse_fraction(s, R.vars());
  return Fraction(p.num, p.den);
}

PlantFraction plant32() { return scalar_denominator(golden::plant(), A()); }
PlantFraction siso() { return scalar_denominator(FracMat::from(1, 1, {F(A(), "z^2/(1-z^2)")}), A()); }

void c1(Check& check) {
  GefResult g;
  const double ms = timed([&] { g = gef(plant32()); });
  auto want = golden::factor_generators();
  check(g.entries.size() == 3, "three index sets");
  for (std::size_t k = 0; k < 3 && k < g.entries.size(); ++k) {
    check(ideals_equal(g.entries[k].ideal, lift_ideal(want[k], A())), "factor " + std::to_string(k + 1) + " differs");
  }
  check.time_limit(ms, 10000, "gef");
}

void c2(Check& check) {
  bool ok = false;
  const double ms = timed([&] {
    ok = golden::alpha1() * golden::lambda0_1() + golden::alpha2() * golden::lambda0_2() == one();
  });
  check(ok, "alpha1 lambda01 + alpha2 lambda02 != 1");
  for (const auto& p : {golden::alpha1(), golden::alpha2()}) check(membership(p, A()), "alpha outside A");
  check(membership(golden::lambda1(), A()) && membership(golden::lambda2(), A()), "lambda outside A");
  check.time_limit(ms, 1000, "identity");
}

void c3(Check& check) {
  StabilizabilityResult a, b;
  const double ma = timed([&] { a = stabilizable(plant32()); });
  check(a.stabilizable, "two-output plant reported not stabilizable");
  auto XY = RingModel::polynomial_ring({"x", "y"}, ZMode::ZeroIdeal);
  const double mb = timed([&] { b = stabilizable(scalar_denominator(FracMat::from(1, 1, {F(XY, "x/y")}), XY)); });
  check(!b.stabilizable, "x/y reported stabilizable");
  check.time_limit(ma, 10000, "verdict");
  check.time_limit(mb, 10000, "verdict");
}

void c4(Check& check) {
  ControllerResult r;
  auto pf = plant32();
  const double ms = timed([&] { r = synthesize(pf); });
  check(r.repair_applied, "repair branch did not fire");
  const auto& v = r.verification;
  int in_a = 0;
  for (bool b : v.in_A) in_a += b;
  check(in_a == 9, "only " + std::to_string(in_a) + " of 9 entries in A");
  check(!v.det_E_PC.is_zero(), "det(E+PC) = 0");
  check(z_nonsingular(r.Den, A()), "denominator matrix Z-singular");
  check.time_limit(ms, 60000, "synthesis");
}

void c5(Check& check) {
  VerificationReport v;
  const double ms = timed([&] { v = verify_stabilizing(golden::plant(), golden::controller(), A()); });
  check(v.stabilizing, "golden controller not stabilizing");
  check(v.stabilizing && v.H_stable == golden::closed_loop(), "H differs from h11..h33");
  check.time_limit(ms, 30000, "verification");
}

void c6(Check& check) {
  auto r = repair_nonsingular(golden::repair_A(), golden::repair_B(), A());
  check(r.R == PolyMat::from(1, 2, {one(), Polynomial(A().vars())}), "R' != [1 0]");
  check(r.minor == golden::repair_minor(), "minor differs");
}

void c7(Check& check) {
  auto base = gef(plant32());
  std::mt19937 rng(7);
  for (int t = 0; t < 5; ++t) {
    Polynomial s = oracle::random_element(rng, A(), 6, 4);
    s += Polynomial(A().vars(), 1 - s.constant_term());
    auto g = gef(plant_from_fraction(scale(s, golden::N()), golden::d() * s, A()));
    for (std::size_t k = 0; k < 3; ++k)
      check(ideals_equal(g.entries[k].ideal, base.entries[k].ideal), "factor changed under s = " + format_canonical(s));
  }
}

void c8(Check& check) {
  auto pf = plant32();
  auto r = synthesize(pf);
  check(transpose_duality_check(pf.P, r.C, A()), "two-output plant");
  std::mt19937 rng(8);
  int done = 0;
  while (done < 10) {
    auto den = [&] {
      Polynomial d = oracle::random_poly(rng, A().vars(), 3, 3, 4);
      return d + Polynomial(A().vars(), 1 - d.constant_term());
    };
    FracMat P = FracMat::from(1, 1, {Fraction(oracle::random_poly(rng, A().vars(), 3, 3, 4), den())});
    FracMat C = FracMat::from(1, 1, {Fraction(oracle::random_poly(rng, A().vars(), 3, 3, 4), den())});
    if ((Fraction(one()) + P(0, 0) * C(0, 0)).is_zero()) continue;
    check(transpose_duality_check(P, C, A()), "random SISO pair " + std::to_string(done));
    ++done;
  }
}

void c9(Check& check) {
  auto g = gef(plant32());
  const Polynomial f = golden::lambda1() * golden::lambda1();
  const std::vector<Polynomial> minor_gens = minors(scale(f, golden::K()), 1);
  std::vector<Polynomial> all;
  for (const auto& e : g.entries) all.insert(all.end(), e.generators.begin(), e.generators.end());
  IdealHandle sum = lift_ideal(all, A());
  for (const auto& q : minor_gens) {
    check(ideal_membership(lift(q, A()), g.entries[0].ideal).member, "minor outside the first factor");
    check(ideal_membership(lift(q, A()), sum).member, "minor outside the sum of factors");
  }
  IdealHandle minor_ideal = lift_ideal(minor_gens, A());
  check(ideal_membership(lift(f * f, A()), minor_ideal).member, "f^2 outside the minor ideal");
}

void c10(Check& check) {
  std::mt19937 rng(10);
  int agree = 0;
  for (int t = 0; t < 24; ++t) {
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(1 + t % 3);
    auto vars = make_vars(names);
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2; ++k) gens.push_back(oracle::random_poly(rng, vars, 2, 3, 3));
    Polynomial p(vars);
    if (t % 2 == 0) {
      for (const auto& gg : gens) p += oracle::random_poly(rng, vars, 2, 2, 3) * gg;
    } else {
      p = oracle::random_poly(rng, vars, 4, 4, 3);
    }
    IdealHandle I(free_presentation(vars), gens);
    auto m = ideal_membership(p, I);
    int bound = 4;
    for (const auto& w : m.witness) bound = std::max(bound, w.total_degree());
    const bool o = oracle::bounded_membership(p, gens, vars, bound).has_value();
    check(o == m.member, "disagreement on instance " + std::to_string(t));
    agree += o == m.member;
  }
  check(agree >= 20, "fewer than 20 agreeing instances");
}

void c11(Check& check) {
  for (auto pf : {plant32(), siso()}) {
    auto r = synthesize(pf);
    auto cmp = compare_to_H(pf.P, r.C, 50);
    check(cmp.equal, "simulation differs: " + cmp.first_mismatch);
    std::size_t support = 0;
    for (const auto& h : r.H.data()) support = std::max<std::size_t>(support, h.total_degree());
    for (std::size_t ch = 0; ch < pf.n + pf.m; ++ch) {
      auto tr = simulate_impulse(pf.P, r.C, ch, 50);
      for (std::size_t t = 0; t < 50; ++t)
        for (const auto* sig : {&tr.e1, &tr.e2})
          for (const auto& x : (*sig)[t])
            if (t == 1 || t > support) check(x == 0, "response nonzero at step " + std::to_string(t));
    }
  }
}

void c12(Check& check) {
  auto pf = plant32();
  auto r = synthesize(pf);
  check(causality_check(pf, r).ok, "two-output controller");
  auto ps = siso();
  auto rs = synthesize(ps);
  auto c = causality_check(ps, rs);
  check(c.plant_strictly_causal, "plant not strictly causal");
  check(c.entries_causal && c.ok, "SISO controller not causal");
}

void c13(Check& check) {
  const auto& pr = A().presentation();
  Polynomial want = parse_poly("u^3 - v^2", pr.vars);
  check(pr.relations.size() == 1 && (pr.relations[0] == want || pr.relations[0] == -want), "relation ideal");
  std::mt19937 rng(13);
  for (int t = 0; t < 100; ++t) {
    Polynomial a = oracle::random_element(rng, A(), 16, 5);
    check(push(lift(a, A()), A()) == a, "push(lift(a)) != a for " + format_canonical(a));
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria{
      {"factor ideals of the two-output plant", c1},
      {"Bezout identity of the golden alpha, lambda0", c2},
      {"stabilizability verdicts", c3},
      {"synthesis soundness with repair", c4},
      {"golden controller closed loop", c5},
      {"golden repair instance", c6},
      {"representation invariance", c7},
      {"transpose duality", c8},
      {"minor ideal relations for f = lambda1^2", c9},
      {"membership oracle equivalence", c10},
      {"time/frequency agreement", c11},
      {"controller causality", c12},
      {"presentation of Q[z^2,z^3]", c13},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[k].second(check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    const double ms = ms_since(t0);
    const Outcome o = check.outcome();
    std::printf("[%s] %2zu %-42s %9.1f ms%s%s\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first, ms,
                o.ok ? "" : "  ", o.detail.c_str());
    failed += !o.ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
