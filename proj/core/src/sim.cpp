#include "gefstab/sim.hpp"

#include <ostream>

#include "gefstab/error.hpp"
#include "gefstab/linsolve.hpp"
#include "gefstab/synth.hpp"

namespace gefstab {

DiffEq to_diffeq(const Fraction& tf) {
  if (!tf.univariate()) throw InputError("simulation needs a univariate delay ring");
  Fraction r = tf.reduced();
  DiffEq eq{r.num().univariate_coefficients(), r.den().univariate_coefficients()};
  if (eq.den.empty() || sgn(eq.den[0]) == 0) throw NotCausal("transfer function " + format_fraction(tf) + " is not causal");
  return eq;
}

Rational DiffEqState::past() const {
  Rational s = 0;
  for (std::size_t k = 1; k < eq_.num.size() && k <= x_.size(); ++k) s += eq_.num[k] * x_[k - 1];
  for (std::size_t k = 1; k < eq_.den.size() && k <= y_.size(); ++k) s -= eq_.den[k] * y_[k - 1];
  return s / eq_.den[0];
}

Rational DiffEqState::step(const Rational& x) {
  Rational y = direct_gain() * x + past();
  x_.insert(x_.begin(), x);
  y_.insert(y_.begin(), y);
  if (x_.size() > eq_.num.size()) x_.pop_back();
  if (y_.size() > eq_.den.size()) y_.pop_back();
  return y;
}

std::vector<Rational> impulse_response(const Fraction& tf, std::size_t steps) {
  DiffEqState s(to_diffeq(tf));
  std::vector<Rational> out;
  for (std::size_t t = 0; t < steps; ++t) out.push_back(s.step(t == 0 ? Rational(1) : Rational(0)));
  return out;
}

namespace {

std::vector<std::vector<DiffEqState>> states_of(const FracMat& M) {
  std::vector<std::vector<DiffEqState>> s(M.rows());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) s[i].emplace_back(to_diffeq(M(i, j)));
  return s;
}

}  // namespace

SignalTrace simulate_loop(const FracMat& P, const FracMat& C, const std::vector<std::vector<Rational>>& u1,
                          const std::vector<std::vector<Rational>>& u2, std::size_t steps) {
  const std::size_t n = P.rows(), m = P.cols();
  if (C.rows() != m || C.cols() != n) throw InputError("controller must be m x n for an n x m plant");
  if (u1.size() < steps || u2.size() < steps) throw InputError("input traces shorter than the step count");
  auto ps = states_of(P);
  auto cs = states_of(C);
  const std::size_t dim = n + m;

  // [[E_n, P0], [-C0, E_m]]
  std::vector<std::vector<Rational>> A(dim, std::vector<Rational>(dim, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    A[i][i] = 1;
    for (std::size_t j = 0; j < m; ++j) A[i][n + j] = ps[i][j].direct_gain();
  }
  for (std::size_t i = 0; i < m; ++i) {
    A[n + i][n + i] = 1;
    for (std::size_t j = 0; j < n; ++j) A[n + i][j] = -cs[i][j].direct_gain();
  }
  if (rank(A) != dim) throw IllPosed("algebraic loop is singular at z = 0");

  SignalTrace tr;
  tr.steps = steps;
  for (std::size_t t = 0; t < steps; ++t) {
    if (u1[t].size() != n || u2[t].size() != m) throw InputError("input sample has the wrong width");
    std::vector<Rational> rhs(dim);
    for (std::size_t i = 0; i < n; ++i) {
      Rational past = 0;
      for (std::size_t j = 0; j < m; ++j) past += ps[i][j].past();
      rhs[i] = u1[t][i] - past;
    }
    for (std::size_t i = 0; i < m; ++i) {
      Rational past = 0;
      for (std::size_t j = 0; j < n; ++j) past += cs[i][j].past();
      rhs[n + i] = u2[t][i] + past;
    }
    auto sol = solve_linear(A, rhs, dim);
    if (!sol) throw InternalError("nonsingular loop system has no solution");
    std::vector<Rational> e1(sol->begin(), sol->begin() + n), e2(sol->begin() + n, sol->end());
    std::vector<Rational> y1(m, Rational(0)), y2(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) y1[i] += cs[i][j].step(e1[j]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) y2[i] += ps[i][j].step(e2[j]);
    tr.u1.push_back(u1[t]);
    tr.u2.push_back(u2[t]);
    tr.e1.push_back(std::move(e1));
    tr.e2.push_back(std::move(e2));
    tr.y1.push_back(std::move(y1));
    tr.y2.push_back(std::move(y2));
  }
  if (!loop_equations_hold(tr)) throw InternalError("loop equations violated in simulation");
  return tr;
}

SignalTrace simulate_impulse(const FracMat& P, const FracMat& C, std::size_t channel, std::size_t steps) {
  const std::size_t n = P.rows(), m = P.cols();
  if (channel >= n + m) throw InputError("impulse channel out of range");
  std::vector<std::vector<Rational>> u1(steps, std::vector<Rational>(n, Rational(0)));
  std::vector<std::vector<Rational>> u2(steps, std::vector<Rational>(m, Rational(0)));
  if (steps > 0) {
    if (channel < n) u1[0][channel] = 1;
    else u2[0][channel - n] = 1;
  }
  return simulate_loop(P, C, u1, u2, steps);
}

bool loop_equations_hold(const SignalTrace& tr) {
  for (std::size_t t = 0; t < tr.steps; ++t) {
    for (std::size_t i = 0; i < tr.e1[t].size(); ++i)
      if (tr.e1[t][i] != tr.u1[t][i] - tr.y2[t][i]) return false;
    for (std::size_t i = 0; i < tr.e2[t].size(); ++i)
      if (tr.e2[t][i] != tr.u2[t][i] + tr.y1[t][i]) return false;
  }
  return true;
}

CompareReport compare_to_H(const FracMat& P, const FracMat& C, std::size_t steps) {
  return compare_to_H(P, C, closed_loop(P, C), steps);
}

CompareReport compare_to_H(const FracMat& P, const FracMat& C, const FracMat& H, std::size_t steps) {
  const std::size_t n = P.rows(), m = P.cols();
  if (H.rows() != n + m || H.cols() != n + m) throw InputError("reference H has the wrong shape");
  CompareReport rep;
  for (std::size_t j = 0; j < n + m; ++j) {
    const SignalTrace tr = simulate_impulse(P, C, j, steps);
    for (std::size_t i = 0; i < n + m; ++i) {
      const auto expected = impulse_response(H(i, j), steps);
      for (std::size_t t = 0; t < steps; ++t) {
        const Rational& got = i < n ? tr.e1[t][i] : tr.e2[t][i - n];
        if (got == expected[t]) continue;
        if (rep.mismatches++ == 0) {
          rep.first_mismatch = "H(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") at step " +
                               std::to_string(t) + ": simulated " + to_string(got) + ", expected " +
                               to_string(expected[t]);
        }
        rep.equal = false;
      }
    }
  }
  return rep;
}

void write_csv(std::ostream& os, const SignalTrace& tr) {
  const std::size_t n = tr.u1.empty() ? 0 : tr.u1[0].size();
  const std::size_t m = tr.u2.empty() ? 0 : tr.u2[0].size();
  os << "step";
  auto header = [&](const char* name, std::size_t count) {
    for (std::size_t i = 1; i <= count; ++i) os << ',' << name << '_' << i;
  };
  header("u1", n);
  header("u2", m);
  header("e1", n);
  header("e2", m);
  header("y1", m);
  header("y2", n);
  os << '\n';
  for (std::size_t t = 0; t < tr.steps; ++t) {
    os << t;
    for (const auto* sig : {&tr.u1, &tr.u2, &tr.e1, &tr.e2, &tr.y1, &tr.y2})
      for (const auto& x : (*sig)[t]) os << ',' << to_string(x);
    os << '\n';
  }
}

}  // namespace gefstab
