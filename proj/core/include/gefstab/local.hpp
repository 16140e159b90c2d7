#pragma once

#include <string>

#include "gefstab/polynomial.hpp"
#include "gefstab/ring.hpp"

namespace gefstab {

// Element num / f^exp of the localization A_f.
//
// After every operation f is divided out of num while the quotient stays
// in A, so exp is as small as exact division allows.
class LocalElem {
 public:
  LocalElem(Polynomial num, unsigned exp, Polynomial f, RingModel ring);

  static LocalElem of(const Polynomial& a, const Polynomial& f, const RingModel& ring) {
    return LocalElem(a, 0, f, ring);
  }

  const Polynomial& num() const { return num_; }
  unsigned exp() const { return exp_; }
  const Polynomial& f() const { return f_; }
  const RingModel& ring() const { return ring_; }
  bool is_zero() const { return num_.is_zero(); }

  // f^k * value; throws InternalError when the result is not over A.
  Polynomial times_f_power(unsigned k) const;

  // value / f^k.
  LocalElem over_f_power(unsigned k) const;

  LocalElem operator-() const;
  friend LocalElem operator+(const LocalElem& a, const LocalElem& b);
  friend LocalElem operator-(const LocalElem& a, const LocalElem& b);
  friend LocalElem operator*(const LocalElem& a, const LocalElem& b);
  LocalElem& operator+=(const LocalElem& o) { return *this = *this + o; }

  // Same value in A_f (cross multiplication by powers of f).
  friend bool operator==(const LocalElem& a, const LocalElem& b);

 private:
  void normalize();

  Polynomial num_;
  unsigned exp_;
  Polynomial f_;
  RingModel ring_;
};

std::string format_local(const LocalElem& x);

}  // namespace gefstab
