#pragma once

#include <optional>
#include <vector>

#include "gefstab/gef.hpp"
#include "gefstab/local.hpp"
#include "gefstab/matrix.hpp"

namespace gefstab {

struct StabilizabilityCertificate {
  std::vector<IndexSet> sharp;     // index sets with nonzero lambda, lexicographic
  std::vector<Polynomial> lambda;  // lambda_I in the factor of I; sum = 1
  unsigned omega = 1;
  std::vector<Polynomial> a;       // sum a_I lambda_I^omega = 1
};

struct StabilizabilityResult {
  bool stabilizable = false;
  GefResult gef;
  std::optional<StabilizabilityCertificate> certificate;
  // Not stabilizable: reduced basis of the sum of all factors, pushed to A.
  std::vector<Polynomial> evidence;
};

// Decides whether the factors generate A.  On success the certificate
// comes from the first family of index sets (by size, then
// lexicographically) whose factors already generate A; omega = 1, a_I = 1.
StabilizabilityResult stabilizable(const PlantFraction& pf);
StabilizabilityResult stabilizable(const PlantFraction& pf, GefResult gef);

struct LocalFactorization {
  IndexSet I;
  Polynomial lambda;
  PolyMat K;      // lambda T = K Delta_I T
  LocalMat N;     // n x m
  LocalMat D;     // m x m
  LocalMat Ytil;  // m x n
  LocalMat Xtil;  // m x m
  PolyMat X_sel;  // (m+n) x n
};

LocalFactorization local_factorization(const PlantFraction& pf, const GefEntry& entry, const Polynomial& lambda);

// True when Ytil N + Xtil D = E_m over A_lambda.
bool bezout_holds(const LocalFactorization& lf);

// a_I with sum a_I lambda_I^omega = 1, from the multinomial expansion of
// (sum lambda_I)^(s(omega-1)+1).
std::vector<Polynomial> partition_powers(const std::vector<Polynomial>& lambda, unsigned omega);

struct RepairResult {
  PolyMat R;              // m x n over A, entries 0/1
  Polynomial minor;       // the chosen full-size minor of [A; B]
  std::vector<std::size_t> a_rows;  // excluded rows of A, 1-based
  std::vector<std::size_t> b_rows;  // included rows of B, 1-based
};

// R with A + R B Z-nonsingular (R = O when A already is).  Minors are
// tried by number of B rows, then lexicographically.
RepairResult repair_nonsingular(const PolyMat& A, const PolyMat& B, const RingModel& ring);

struct VerificationReport {
  bool well_posed = false;
  Fraction det_E_PC;
  FracMat H;                   // (n+m) x (n+m)
  std::vector<bool> in_A;      // row-major verdicts for H
  bool stabilizing = false;
  PolyMat H_stable;            // H over A when stabilizing
};

// H(P, C) = [[(E+PC)^-1, -P(E+CP)^-1], [C(E+PC)^-1, (E+CP)^-1]].
// Throws IllPosed when det(E + PC) = 0.
FracMat closed_loop(const FracMat& P, const FracMat& C);

VerificationReport verify_stabilizing(const FracMat& P, const FracMat& C, const RingModel& ring);

struct ControllerResult {
  FracMat C;          // m x n
  PolyMat Den;        // m x m, Z-nonsingular
  PolyMat Num;        // m x n
  PolyMat H;          // over A
  StabilizabilityCertificate certificate;
  std::vector<LocalFactorization> locals;
  bool repair_applied = false;
  IndexSet I0;
  std::optional<RepairResult> repair;
  VerificationReport verification;
};

// Throws NotStabilizable; any failed self-check throws InternalError.
ControllerResult synthesize(const PlantFraction& pf);
ControllerResult synthesize(const PlantFraction& pf, const StabilizabilityResult& st);

// H(P^t, C^t)^t = [O E_m; E_n O] H(P, C) [O E_n; E_m O], and C^t
// stabilizes P^t whenever C stabilizes P.
bool transpose_duality_check(const FracMat& P, const FracMat& C, const RingModel& ring);

struct CausalityReport {
  bool den_z_nonsingular = false;
  bool entries_causal = false;
  bool plant_strictly_causal = false;
  bool ok = false;
};

CausalityReport causality_check(const PlantFraction& pf, const ControllerResult& result);
CausalityReport causality_check(const FracMat& P, const FracMat& C, const PolyMat& Den, const RingModel& ring);

}  // namespace gefstab
