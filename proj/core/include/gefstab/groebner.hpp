#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "gefstab/polynomial.hpp"

namespace gefstab {

// Term orders for the Groebner engine.  Variables are ranked by their
// position in the ambient variable list (first = greatest).
struct MonomialOrder {
  enum class Kind { Lex, Grevlex, BlockElimination };

  Kind kind = Kind::Grevlex;
  // BlockElimination: the first `front` variables form the eliminated
  // block; each block is compared by grevlex.
  std::size_t front = 0;

  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
  static MonomialOrder elimination(std::size_t front) { return {Kind::BlockElimination, front}; }

  // Strict "a < b".
  bool less(const Exponents& a, const Exponents& b) const;
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

// Reduced Groebner basis with cofactors: basis()[k] equals
// sum_i cofactors()[k][i] * generators()[i] exactly.
class GroebnerBasis {
 public:
  struct Impl;

  GroebnerBasis() = default;
  explicit GroebnerBasis(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  const VarList& vars() const;
  const MonomialOrder& order() const;
  const std::vector<Polynomial>& generators() const;
  const std::vector<Polynomial>& basis() const;
  const std::vector<std::vector<Polynomial>>& cofactors() const;
  const GroebnerStats& stats() const;

  bool empty() const { return impl_ == nullptr; }
  bool is_unit() const;

  // Remainder of full reduction.  When `quotient` is non-null it receives
  // h with p - remainder = sum_i h_i * generators()[i].
  Polynomial normal_form(const Polynomial& p, std::vector<Polynomial>* quotient = nullptr) const;

  bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }

  const Impl& impl() const { return *impl_; }

 private:
  std::shared_ptr<const Impl> impl_;
};

// Buchberger's algorithm with the sugar selection strategy (ties broken
// by basis index) and the product and chain criteria.  The cofactor
// identity of every basis element is re-verified before returning; a
// mismatch throws InternalError.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const VarList& vars,
                         const MonomialOrder& order);

// True when every S-polynomial of `basis` reduces to zero modulo `basis`.
bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis, const VarList& vars,
                                    const MonomialOrder& order);

// Generators of <generators> ∩ Q[vars minus drop], computed with a block
// elimination order.  Results live over the remaining variables, in their
// original relative order.
std::vector<Polynomial> eliminate_variables(const std::vector<Polynomial>& generators,
                                            const VarList& vars,
                                            const std::vector<std::string>& drop);

}  // namespace gefstab
