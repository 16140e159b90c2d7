#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gefstab/groebner.hpp"
#include "gefstab/polynomial.hpp"

namespace gefstab {

// Which prime ideal Z of A decides causality.
enum class ZMode {
  ZeroConstantTerm,  // Z = elements with zero constant term
  ZeroIdeal,         // Z = {0}: every nonzero denominator is admissible
};

// Polynomial model of A as a quotient Q[u_1..u_k] / relations.
//
// For a monomial subalgebra Q[z^e_1, ..., z^e_k] the variable u_i stands
// for z^e_i; `lift_basis` is the elimination basis of <u_i - z^e_i> with
// the delay variable greatest.  For a full polynomial ring the
// presentation is the ring itself with no relations.
struct Presentation {
  VarList vars;
  std::vector<Polynomial> relations;
  // Subalgebra only.
  std::string delay_var;
  std::vector<std::uint32_t> exponents;
  VarList lift_vars;  // delay_var followed by vars
  GroebnerBasis lift_basis;
  // Groebner basis of the relation ideal alone (grevlex); empty for a free ring.
  GroebnerBasis relation_basis;

  bool is_free() const { return relations.empty(); }
};

// The ring A of stable causal transfer functions: either a full
// polynomial ring Q[x_1..x_r] or a monomial subalgebra Q[z^e_1..z^e_k]
// of the delay ring Q[z].  Copies share the immutable presentation.
class RingModel {
 public:
  enum class Kind { FullPolynomialRing, MonomialSubalgebra };

  // Throws InputError for an empty or duplicated variable list.
  static RingModel polynomial_ring(std::vector<std::string> vars, ZMode z_mode);

  // Exponent generators must be {1} or have gcd 1 with every entry >= 2.
  static RingModel monomial_subalgebra(std::string delay_var, std::vector<std::uint32_t> generators,
                                       ZMode z_mode);

  Kind kind() const;
  ZMode z_mode() const;
  const VarList& vars() const;  // ambient variables of A's elements
  bool univariate() const { return vars()->size() == 1; }
  bool is_subalgebra() const { return kind() == Kind::MonomialSubalgebra; }

  // Subalgebra data.
  const std::vector<std::uint32_t>& generators() const;
  std::uint32_t conductor() const;
  bool in_semigroup(std::uint64_t k) const;

  const Presentation& presentation() const;
  std::shared_ptr<const Presentation> presentation_ptr() const;

  std::string describe() const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

// ---- membership and the causality ideal ----

bool membership(const Polynomial& p, const RingModel& ring);

// Assumes a is in A.
bool in_Z(const Polynomial& a, const RingModel& ring);

inline bool in_A_minus_Z(const Polynomial& a, const RingModel& ring) {
  return membership(a, ring) && !in_Z(a, ring);
}

// Presentation polynomial representing a (throws InputError if a is not in A).
Polynomial lift(const Polynomial& a, const RingModel& ring);

// Image of a presentation polynomial in A (u_i -> z^e_i).
Polynomial push(const Polynomial& q, const RingModel& ring);

// Smallest-degree s with s(0) = 1 such that s * f lies in A for every f.
// Only meaningful for univariate rings; returns 1 when all f are already
// in A.  nullopt when no such s exists.
std::optional<Polynomial> unit_search(const std::vector<Polynomial>& polys, const RingModel& ring);

}  // namespace gefstab
