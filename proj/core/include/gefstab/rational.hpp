#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gefstab {

// Exact rational scalar.  mpq_class keeps values canonical (reduced,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

// Accepts "p" or "p/q" with an optional leading sign.
Rational rational_from_string(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

}  // namespace gefstab
