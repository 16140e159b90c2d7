#include <benchmark/benchmark.h>

#include "gefstab/gef.hpp"
#include "gefstab/groebner.hpp"
#include "gefstab/io.hpp"
#include "gefstab/sim.hpp"
#include "gefstab/synth.hpp"

using namespace gefstab;

namespace {

const char* kPlant = R"js({
  "ring": {"kind": "monomial_subalgebra", "variable": "z", "generators": [2, 3]},
  "inputs": 1,
  "outputs": 2,
  "entries": [["(1-z^3)/(1-z^2)"], ["(1-8*z^3)/(1-4*z^2)"]]
})js";

PlantFraction plant() {
  static const PlantSpec spec = parse_plant(kPlant);
  return scalar_denominator(spec.P, spec.ring);
}

void BM_Gef(benchmark::State& state) {
  const auto pf = plant();
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(gef(pf, parallel));
}
BENCHMARK(BM_Gef)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Stabilizable(benchmark::State& state) {
  const auto pf = plant();
  for (auto _ : state) benchmark::DoNotOptimize(stabilizable(pf));
}
BENCHMARK(BM_Stabilizable)->Unit(benchmark::kMillisecond);

void BM_Synthesize(benchmark::State& state) {
  const auto pf = plant();
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(pf));
}
BENCHMARK(BM_Synthesize)->Unit(benchmark::kMillisecond);

void BM_Buchberger(benchmark::State& state) {
  const auto vars = make_vars({"x", "y", "z"});
  const std::vector<Polynomial> gens{parse_poly("x^2 + y*z - 1", vars), parse_poly("x*y - z^2", vars),
                                     parse_poly("y^3 - x*z + 2", vars)};
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, vars, MonomialOrder::grevlex()));
}
BENCHMARK(BM_Buchberger)->Unit(benchmark::kMillisecond);

void BM_SimulateImpulse(benchmark::State& state) {
  const auto pf = plant();
  const auto res = synthesize(pf);
  const PlantSpec spec = parse_plant(kPlant);
  const auto steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(simulate_impulse(spec.P, res.C, 1, steps));
}
BENCHMARK(BM_SimulateImpulse)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
