#include <random>

#include "doctest.h"
#include "gefstab/error.hpp"
#include "gefstab/matrix.hpp"
#include "support/golden.hpp"
#include "support/oracles.hpp"

using namespace gefstab;

namespace {

const VarList& zv() {
  static const VarList v = make_vars({"z"});
  return v;
}

PolyMat random_mat(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::vector<Polynomial> d;
  for (std::size_t k = 0; k < r * c; ++k) d.push_back(oracle::random_poly(rng, zv(), 2, 2, 3));
  return PolyMat::from(r, c, std::move(d));
}

}  // namespace

TEST_SUITE("matrixring") {
  TEST_CASE("2x2 determinant and adjugate") {
    auto v = make_vars({"a", "b", "c", "d"});
    auto P = [&](const char* s) { return parse_poly(s, v); };
    PolyMat M = PolyMat::from(2, 2, {P("a"), P("b"), P("c"), P("d")});
    CHECK(det(M) == P("a*d - b*c"));
    CHECK(adjugate(M) == PolyMat::from(2, 2, {P("d"), P("-b"), P("-c"), P("a")}));
    CHECK(det(identity_like(3, Polynomial(v))) == P("1"));
  }

  TEST_CASE("Bareiss and Laplace agree") {
    std::mt19937 rng(31);
    for (std::size_t n = 1; n <= 5; ++n) {
      PolyMat M = random_mat(rng, n, n);
      CHECK(det_bareiss(M) == det_laplace(M));
    }
  }

  TEST_CASE("M adj(M) = det(M) E for random square M") {
    std::mt19937 rng(32);
    for (int t = 0; t < 12; ++t) {
      const std::size_t n = 1 + t % 4;
      PolyMat M = random_mat(rng, n, n);
      PolyMat lhs = M * adjugate(M);
      PolyMat rhs = scale(det(M), identity_like(n, Polynomial(zv())));
      CHECK(lhs == rhs);
      CHECK(adjugate(M) * M == rhs);
    }
  }

  TEST_CASE("selection matrices") {
    auto s = selection({1}, 1, 2, zv());
    const Polynomial o(zv()), i(zv(), 1);
    CHECK(s.delta == PolyMat::from(1, 3, {i, o, o}));
    CHECK(s.x == PolyMat::from(2, 3, {o, i, o, o, o, i}).transpose());
    auto s2 = selection({2, 3}, 2, 1, zv());
    CHECK(s2.delta == PolyMat::from(2, 3, {o, i, o, o, o, i}));
    CHECK(s2.x == PolyMat::from(3, 1, {i, o, o}));
  }

  TEST_CASE("index sets") {
    CHECK(enumerate_index_sets(1, 2) == std::vector<IndexSet>{{1}, {2}, {3}});
    CHECK(enumerate_index_sets(2, 1) == std::vector<IndexSet>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(enumerate_index_sets(2, 2).size() == 6);
    CHECK(complement({2, 4}, 5) == IndexSet{1, 3, 5});
    CHECK(format_index_set({1, 3}) == "{1,3}");
    CHECK(laplace_sign({1}) == 1);
    CHECK(laplace_sign({2}) == -1);
    CHECK(laplace_sign({2, 3}) == 1);
  }

  TEST_CASE("minor ideals") {
    const Polynomial f = golden::lambda1() * golden::lambda1();
    PolyMat fK = scale(f, golden::K());
    auto gens = minors(fK, 1);
    REQUIRE(gens.size() == 3);
    const Polynomial l = golden::lambda1(), a = golden::alpha1();
    CHECK(gens[0] == l * l * l);
    CHECK(gens[1] == a * l * l * golden::poly("(1+z)*(1-3*z)*(1+2*z+4*z^2)"));
    CHECK(gens[2] == a * l * l * golden::poly("(1+z)*(1+2*z)*(1-3*z)"));

    auto E2 = identity_like(2, Polynomial(zv()));
    CHECK(minors(E2, 2) == std::vector<Polynomial>{Polynomial(zv(), 1)});
    auto xy = make_vars({"x", "y"});
    PolyMat col = PolyMat::from(2, 1, {parse_poly("x", xy), parse_poly("y", xy)});
    CHECK(minors(col, 1) == std::vector<Polynomial>{parse_poly("x", xy), parse_poly("y", xy)});
  }

  TEST_CASE("Binet-Cauchy for det(A + R B)") {
    std::mt19937 rng(33);
    for (std::size_t total = 2; total <= 4; ++total) {
      for (std::size_t m = 1; m < total; ++m) {
        const std::size_t n = total - m;
        PolyMat A = random_mat(rng, m, m), B = random_mat(rng, n, m), R = random_mat(rng, m, n);
        PolyMat ER = hstack(identity_like(m, Polynomial(zv())), R);
        PolyMat AB = vstack(A, B);
        Polynomial sum(zv());
        for (const auto& S : combinations(total, m)) {
          std::vector<std::size_t> all_m;
          for (std::size_t k = 0; k < m; ++k) all_m.push_back(k);
          sum += det(ER.pick(all_m, S)) * det(AB.pick(S, all_m));
        }
        CHECK(det(A + R * B) == sum);
      }
    }
  }

  TEST_CASE("Laplace expansion along complementary selections") {
    std::mt19937 rng(34);
    for (std::size_t total = 2; total <= 4; ++total) {
      for (std::size_t m = 1; m < total; ++m) {
        const std::size_t n = total - m;
        PolyMat K = random_mat(rng, total, m), R = random_mat(rng, total, n);
        Polynomial sum(zv());
        for (const auto& I : enumerate_index_sets(m, n)) {
          auto sel = selection(I, m, n, zv());
          auto bar = selection(complement(I, total), n, m, zv());
          Polynomial term = det(sel.delta * K) * det(bar.delta * R);
          if (laplace_sign(I) < 0) term = -term;
          sum += term;
        }
        CHECK(det(hstack(K, R)) == sum);
      }
    }
  }

  TEST_CASE("fraction matrices") {
    auto F = [](const char* s) {
      auto p = parse_fraction(s, zv());
      return Fraction(p.num, p.den);
    };
    FracMat M = FracMat::from(2, 2, {F("1/(1-z)"), F("z"), F("0"), F("2")});
    FracMat inv = inverse(M);
    CHECK(M * inv == identity_like(2, F("1")));
    CHECK_THROWS_AS(inverse(FracMat::from(1, 1, {F("0")})), IllPosed);
    auto fm = format_matrix(M);
    CHECK(fm[0][0] == "(1)/(1 - z)");
    CHECK(fm[1][1] == "2");
  }
}
