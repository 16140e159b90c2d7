#pragma once

#include <optional>
#include <string>
#include <utility>

#include "gefstab/polynomial.hpp"
#include "gefstab/ring.hpp"

namespace gefstab {

// Element num/den of the fraction field of A.
//
// Construction keeps the representation it is given (plant files rely on
// the written denominators).  Arithmetic results are reduced: in
// univariate mode (num and den share at most one variable) by the monic
// gcd, leaving a monic denominator; in multivariate mode only exact
// quotients and constant factors are cancelled.
class Fraction {
 public:
  Fraction();
  explicit Fraction(Polynomial num);
  Fraction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool univariate() const;

  Fraction reduced() const;

  // Set when the value is a polynomial (den divides num exactly).
  std::optional<Polynomial> as_polynomial() const;

  Fraction operator-() const;
  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator-(const Fraction& a, const Fraction& b);
  friend Fraction operator*(const Fraction& a, const Fraction& b);
  friend Fraction operator/(const Fraction& a, const Fraction& b);
  Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
  Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
  Fraction& operator*=(const Fraction& o) { return *this = *this * o; }

  // Equality as elements of the field (cross multiplication).
  friend bool operator==(const Fraction& a, const Fraction& b);
  friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }

 private:
  Polynomial num_;
  Polynomial den_;
};

// "num" when den is 1, otherwise "(num)/(den)".
std::string format_fraction(const Fraction& x);

// A representation n/d of x with n in A and d in A \ Z, if one exists.
//
// Univariate rings: x is reduced over Q[z]; a representation exists iff
// the reduced denominator q has q(0) != 0 (ZeroConstantTerm) and some s
// with s(0) = 1 puts q*s and p*s into A.  The search is bounded by the
// conductor of the semigroup, which makes it complete.
// Multivariate full rings with ZeroConstantTerm: accepted when the given
// denominator has a nonzero constant term or divides the numerator.
std::optional<std::pair<Polynomial, Polynomial>> causal_representation(const Fraction& x,
                                                                        const RingModel& ring);

bool causal(const Fraction& x, const RingModel& ring);
bool strictly_causal(const Fraction& x, const RingModel& ring);

// Decides x in A; returns the element when it is.
std::optional<Polynomial> stable_element(const Fraction& x, const RingModel& ring);

}  // namespace gefstab
