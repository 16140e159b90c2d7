#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gefstab/matrix.hpp"

namespace gefstab {

// y_t = (sum_k n_k x_{t-k} - sum_{k>=1} d_k y_{t-k}) / d_0 for n(z)/d(z),
// z the unit delay.
struct DiffEq {
  std::vector<Rational> num;
  std::vector<Rational> den;  // den[0] != 0
};

// Throws NotCausal when the reduced denominator vanishes at z = 0, and
// InputError for a multivariate fraction.
DiffEq to_diffeq(const Fraction& tf);

class DiffEqState {
 public:
  explicit DiffEqState(DiffEq eq) : eq_(std::move(eq)) {}

  Rational direct_gain() const { return eq_.num.empty() ? Rational(0) : eq_.num[0] / eq_.den[0]; }
  // Output contribution of the stored history.
  Rational past() const;
  Rational step(const Rational& x);

 private:
  DiffEq eq_;
  std::vector<Rational> x_;  // most recent first
  std::vector<Rational> y_;
};

std::vector<Rational> impulse_response(const Fraction& tf, std::size_t steps);

// Per signal, [t][channel].
struct SignalTrace {
  std::size_t steps = 0;
  std::vector<std::vector<Rational>> u1, u2, e1, e2, y1, y2;
};

// e1 = u1 - y2, e2 = u2 + y1, y1 = C e1, y2 = P e2.  u1 is steps x n, u2
// steps x m.  Throws IllPosed when the instantaneous loop is singular.
SignalTrace simulate_loop(const FracMat& P, const FracMat& C, const std::vector<std::vector<Rational>>& u1,
                          const std::vector<std::vector<Rational>>& u2, std::size_t steps);

// Unit impulse on input channel `channel` (u1 channels first).
SignalTrace simulate_impulse(const FracMat& P, const FracMat& C, std::size_t channel, std::size_t steps);

bool loop_equations_hold(const SignalTrace& tr);

struct CompareReport {
  bool equal = true;
  std::size_t mismatches = 0;
  std::string first_mismatch;
};

// Impulse responses of the loop against the entries of H(P, C).
CompareReport compare_to_H(const FracMat& P, const FracMat& C, std::size_t steps);
// Same, against a given reference closed loop.
CompareReport compare_to_H(const FracMat& P, const FracMat& C, const FracMat& H, std::size_t steps);

void write_csv(std::ostream& os, const SignalTrace& tr);

}  // namespace gefstab
