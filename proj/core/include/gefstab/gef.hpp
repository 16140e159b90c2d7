#pragma once

#include <vector>

#include "gefstab/ideal.hpp"
#include "gefstab/matrix.hpp"
#include "gefstab/ring.hpp"

namespace gefstab {

// Plant P = N d^-1 with a scalar denominator d in A \ Z.
struct PlantFraction {
  RingModel ring;
  std::size_t m = 0;  // inputs
  std::size_t n = 0;  // outputs
  FracMat P;          // n x m
  PolyMat N;          // n x m over A
  Polynomial d;

  // [N; d E_m], (m+n) x m.
  PolyMat T() const;
};

// Chooses (N, d).  Univariate rings keep the written denominators: d is
// their lcm, scaled into A \ Z by the conductor-bounded search when
// needed.  Multivariate rings use the product of the distinct
// denominators.  Throws NotCausal when no representation exists.
PlantFraction scalar_denominator(const FracMat& P, const RingModel& ring);

// Builds a plant fraction from explicit (N, d); checks N over A and d in A \ Z.
PlantFraction plant_from_fraction(const PolyMat& N, const Polynomial& d, const RingModel& ring);

struct GefEntry {
  IndexSet I;
  Polynomial delta;   // det(Delta_I T)
  bool singular = false;
  PolyMat C;          // T adj(Delta_I T); empty when singular
  IdealHandle ideal;  // in the presentation variables
  std::vector<Polynomial> generators;  // pushed down to A
};

struct GefResult {
  std::vector<GefEntry> entries;  // lexicographic in I
};

// Lifts elements of A into an ideal of the presentation ring.
IdealHandle lift_ideal(const std::vector<Polynomial>& elements, const RingModel& ring);

GefResult gef(const PlantFraction& pf, bool parallel = true);

// K = lambda C / delta over A, so that lambda T = K Delta_I T.  Throws
// InputError when lambda is not in the factor.
PolyMat gef_K(const PlantFraction& pf, const GefEntry& entry, const Polynomial& lambda);

struct LocalFreenessWitness {
  Polynomial f;
  unsigned nu = 1;
  PolyMat K;  // (m+n) x m
  PolyMat V;  // m x m
};

LocalFreenessWitness local_freeness_witness(const PlantFraction& pf, const GefEntry& entry, const Polynomial& lambda);

}  // namespace gefstab
