#include <random>

#include "doctest.h"
#include "gefstab/error.hpp"
#include "gefstab/gef.hpp"
#include "support/golden.hpp"
#include "support/oracles.hpp"

using namespace gefstab;

namespace {

Fraction F(const RingModel& R, const char* s) {
  auto p = parse_fraction(s, R.vars());
  return Fraction(p.num, p.den);
}

bool same_ideal(const GefEntry& e, const std::vector<Polynomial>& gens, const RingModel& R) {
  return ideals_equal(e.ideal, lift_ideal(gens, R));
}

void check_definition(const PlantFraction& pf, const GefEntry& e) {
  if (e.singular) return;
  const PolyMat T = pf.T();
  const PolyMat DT = selection(e.I, pf.m, pf.n, pf.ring.vars()).delta * T;
  for (const auto& g : e.generators) {
    PolyMat K = gef_K(pf, e, g);
    for (const auto& k : K.data()) CHECK(membership(k, pf.ring));
    CHECK(scale(g, T) == K * DT);
  }
}

}  // namespace

TEST_SUITE("gef") {
  TEST_CASE("scalar denominators") {
    const auto& A = golden::ring();
    auto pf = scalar_denominator(golden::plant(), A);
    CHECK(pf.d == golden::d());
    CHECK(pf.N == golden::N());
    CHECK(pf.T() == vstack(golden::N(), PolyMat::from(1, 1, {golden::d()})));

    auto zero = scalar_denominator(FracMat::from(2, 2, {F(A, "0"), F(A, "0"), F(A, "0"), F(A, "0")}), A);
    CHECK(zero.d == Polynomial(A.vars(), 1));
    for (const auto& x : zero.N.data()) CHECK(x.is_zero());

    auto XY = RingModel::polynomial_ring({"x", "y"}, ZMode::ZeroIdeal);
    auto pxy = scalar_denominator(FracMat::from(1, 1, {F(XY, "x/y")}), XY);
    CHECK(pxy.d == parse_poly("y", XY.vars()));
    CHECK(pxy.N(0, 0) == parse_poly("x", XY.vars()));

    CHECK_THROWS_AS(scalar_denominator(FracMat::from(1, 1, {F(A, "1/z^2")}), A), NotCausal);
    CHECK_THROWS_AS(plant_from_fraction(PolyMat::from(1, 1, {golden::poly("z")}), golden::poly("1"), A), InputError);
  }

  TEST_CASE("factors of the two-output plant") {
    const auto& A = golden::ring();
    auto pf = scalar_denominator(golden::plant(), A);
    auto g = gef(pf);
    auto want = golden::factor_generators();
    REQUIRE(g.entries.size() == 3);
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(g.entries[k].I == IndexSet{k + 1});
      CHECK_FALSE(g.entries[k].singular);
      CHECK(same_ideal(g.entries[k], want[k], A));
      check_definition(pf, g.entries[k]);
    }
    auto seq = gef(pf, false);
    for (std::size_t k = 0; k < 3; ++k) CHECK(seq.entries[k].generators == g.entries[k].generators);
  }

  TEST_CASE("factors of x/y with Z = 0") {
    auto XY = RingModel::polynomial_ring({"x", "y"}, ZMode::ZeroIdeal);
    auto pf = scalar_denominator(FracMat::from(1, 1, {F(XY, "x/y")}), XY);
    auto g = gef(pf);
    REQUIRE(g.entries.size() == 2);
    CHECK(same_ideal(g.entries[0], {parse_poly("x", XY.vars())}, XY));
    CHECK(same_ideal(g.entries[1], {parse_poly("y", XY.vars())}, XY));
    for (const auto& e : g.entries) check_definition(pf, e);
  }

  TEST_CASE("singular selections give the zero ideal") {
    const auto& A = golden::ring();
    auto pf = scalar_denominator(FracMat::from(1, 1, {F(A, "0")}), A);
    auto g = gef(pf);
    CHECK(g.entries[0].singular);
    CHECK(g.entries[0].generators.empty());
    CHECK_FALSE(g.entries[1].singular);
    CHECK(same_ideal(g.entries[1], {Polynomial(A.vars(), 1)}, A));
  }

  TEST_CASE("local freeness witnesses") {
    const auto& A = golden::ring();
    auto pf = scalar_denominator(golden::plant(), A);
    auto g = gef(pf);
    auto w = local_freeness_witness(pf, g.entries[0], golden::lambda1());
    CHECK(w.K == golden::K());
    CHECK(w.nu == 1);
    CHECK(scale(golden::lambda1(), pf.T()) == w.K * w.V);
    CHECK_THROWS_AS(local_freeness_witness(pf, g.entries[0], golden::poly("1")), InputError);

    auto p0 = scalar_denominator(FracMat::from(1, 1, {F(A, "0")}), A);
    auto g0 = gef(p0);
    auto w0 = local_freeness_witness(p0, g0.entries[1], Polynomial(A.vars(), 1));
    CHECK(w0.K == p0.T());
    CHECK(w0.V == PolyMat::from(1, 1, {Polynomial(A.vars(), 1)}));

    auto ps = scalar_denominator(FracMat::from(1, 1, {F(A, "z^2/(1-z^2)")}), A);
    auto gs = gef(ps);
    const Polynomial lam = golden::poly("1 - z^2");
    auto ws = local_freeness_witness(ps, gs.entries[1], lam);
    CHECK(ws.V == PolyMat::from(1, 1, {lam}));
    CHECK(scale(lam, ps.T()) == ws.K * ws.V);
    CHECK(ws.K == PolyMat::from(2, 1, {golden::poly("z^2"), lam}));
  }

  TEST_CASE("zero and ideal closure") {
    const auto& A = golden::ring();
    auto pf = scalar_denominator(golden::plant(), A);
    auto g = gef(pf);
    std::mt19937 rng(51);
    for (const auto& e : g.entries) {
      CHECK(ideal_membership(Polynomial(e.ideal.vars()), e.ideal).member);
      for (const auto& gen : e.generators) {
        Polynomial a = oracle::random_element(rng, A, 6, 3);
        CHECK(ideal_membership(lift(a * gen, A), e.ideal).member);
        PolyMat K = gef_K(pf, e, a * gen);
        CHECK(scale(a * gen, pf.T()) == K * (selection(e.I, 1, 2, A.vars()).delta * pf.T()));
      }
    }
  }

  TEST_CASE("representation invariance") {
    const auto& A = golden::ring();
    auto base = gef(scalar_denominator(golden::plant(), A));
    std::mt19937 rng(52);
    for (int t = 0; t < 2; ++t) {
      Polynomial s = oracle::random_element(rng, A, 5, 3);
      s += Polynomial(A.vars(), 1 - s.constant_term());
      REQUIRE(s.constant_term() == 1);
      auto pf = plant_from_fraction(scale(s, golden::N()), golden::d() * s, A);
      auto g = gef(pf);
      for (std::size_t k = 0; k < 3; ++k) CHECK(ideals_equal(g.entries[k].ideal, base.entries[k].ideal));
    }
  }
}
