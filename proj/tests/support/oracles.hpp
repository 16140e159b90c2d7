#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gefstab/polynomial.hpp"
#include "gefstab/ring.hpp"

namespace oracle {

using gefstab::Polynomial;
using gefstab::Rational;
using gefstab::VarList;

// Coefficients of a polynomial in at most one variable, ascending.
std::vector<Rational> dense(const Polynomial& p);
Polynomial from_dense(const std::vector<Rational>& c, const VarList& vars);

// Schoolbook long division over Q[z]: {quotient, remainder}.
std::pair<std::vector<Rational>, std::vector<Rational>> long_division(std::vector<Rational> p,
                                                                       const std::vector<Rational>& q);

// Horner evaluation of a univariate polynomial.
Rational eval(const Polynomial& p, const Rational& x);

// First `steps` power-series coefficients of n/d, by solving d*s = n term by term.
std::vector<Rational> series(const std::vector<Rational>& n, const std::vector<Rational>& d, std::size_t steps);

// k is a nonnegative integer combination of gens, by exhaustive search.
bool in_semigroup(std::uint64_t k, const std::vector<std::uint32_t>& gens);

// Solves p = sum h_i g_i with deg h_i <= bound as a dense linear system over
// the coefficient space.  Returns the h_i when solvable.
std::optional<std::vector<Polynomial>> bounded_membership(const Polynomial& p, const std::vector<Polynomial>& gens,
                                                          const VarList& vars, int bound);

// Dense Gauss-Jordan solve, independent of the library's solver.
std::optional<std::vector<Rational>> gauss_solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                                                 std::size_t unknowns);

// All exponent vectors of total degree <= d.
std::vector<gefstab::Exponents> monomials_up_to(std::size_t nvars, int d);

Polynomial random_poly(std::mt19937& rng, const VarList& vars, int max_degree, int terms, int coeff_range = 5);

// Random element of a monomial subalgebra, built from semigroup monomials.
Polynomial random_element(std::mt19937& rng, const gefstab::RingModel& ring, int max_degree, int terms,
                          int coeff_range = 5);

// Order-independent view of a polynomial list.
std::set<std::string> as_set(const std::vector<Polynomial>& ps);

}  // namespace oracle
