#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "gefstab/groebner.hpp"
#include "gefstab/ring.hpp"

namespace gefstab {

// Presentation of a free polynomial ring (no relations).
std::shared_ptr<const Presentation> free_presentation(const VarList& vars);

// Ideal of Q[u]/relations given by generators in the presentation
// variables.  The relation generators are adjoined implicitly.  The
// Groebner basis is computed once on first use, safely under concurrent
// readers.
class IdealHandle {
 public:
  IdealHandle(std::shared_ptr<const Presentation> ambient, std::vector<Polynomial> generators);

  const Presentation& ambient() const { return *ambient_; }
  const std::shared_ptr<const Presentation>& ambient_ptr() const { return ambient_; }
  const VarList& vars() const { return ambient_->vars; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  // Grevlex basis of generators followed by the relations.
  const GroebnerBasis& groebner() const;

 private:
  struct Cache {
    std::once_flag once;
    GroebnerBasis gb;
  };
  std::shared_ptr<const Presentation> ambient_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

struct Membership {
  bool member = false;
  // p = sum witness[i] * generators()[i] modulo the relations.
  std::vector<Polynomial> witness;
};

Membership ideal_membership(const Polynomial& p, const IdealHandle& I);

struct BezoutCertificate {
  // 1 = sum coefficients[i] * generators()[i] modulo the relations.
  std::vector<Polynomial> coefficients;
};

struct UnitTest {
  bool unit = false;
  BezoutCertificate certificate;    // set when unit
  std::vector<Polynomial> basis;    // reduced basis (evidence when not unit)
};

UnitTest is_unit_ideal(const IdealHandle& I);

// Checks sum h_i g_i = 1 modulo the relations by normal form.
bool verify_certificate(const IdealHandle& I, const BezoutCertificate& cert);

// (I : f) = {g : g f in I}, from (I ∩ <f>) / f.
IdealHandle colon(const IdealHandle& I, const Polynomial& f);

// I ∩ J by eliminating t from <t I, (1 - t) J>.
IdealHandle intersect(const IdealHandle& I, const IdealHandle& J);

// I ∩ Q[remaining variables], over a free presentation of those variables.
IdealHandle eliminate(const IdealHandle& I, const std::vector<std::string>& drop);

bool ideal_contains(const IdealHandle& I, const IdealHandle& J);
bool ideals_equal(const IdealHandle& I, const IdealHandle& J);

// Reduced basis elements that are not already in the relation ideal.
std::vector<Polynomial> essential_generators(const IdealHandle& I);

}  // namespace gefstab
