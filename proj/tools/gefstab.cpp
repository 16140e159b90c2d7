#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gefstab/error.hpp"
#include "gefstab/gef.hpp"
#include "gefstab/io.hpp"
#include "gefstab/sim.hpp"
#include "gefstab/synth.hpp"

using namespace gefstab;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInput = 2, kInternal = 3 };

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot write " + out_path);
  out << text;
}

ReportFormat format_of(const std::string& s) { return s == "text" ? ReportFormat::Text : ReportFormat::Json; }

struct Options {
  std::string plant, controller, output, report = "json", input = "impulse", input_file;
  std::size_t steps = 20;
  std::size_t channel = 1;
  bool timing = false;
  bool compare = false;
  bool sequential = false;
};

int cmd_gef(const Options& o) {
  PlantSpec plant = load_plant(o.plant);
  PlantFraction pf = scalar_denominator(plant.P, plant.ring);
  emit(gef_report(pf, gef(pf, !o.sequential), format_of(o.report)), o.output);
  return kOk;
}

int cmd_check(const Options& o) {
  PlantSpec plant = load_plant(o.plant);
  PlantFraction pf = scalar_denominator(plant.P, plant.ring);
  StabilizabilityResult st = stabilizable(pf, gef(pf, !o.sequential));
  if (!o.output.empty() || o.report == "json") {
    emit(synth_report(pf, st, nullptr, {}, format_of(o.report)), o.output);
  } else {
    std::cout << (st.stabilizable ? "stabilizable" : "not stabilizable") << "\n";
  }
  return st.stabilizable ? kOk : kNegative;
}

int cmd_synth(const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  PlantSpec plant = load_plant(o.plant);
  PlantFraction pf = scalar_denominator(plant.P, plant.ring);
  StabilizabilityResult st = stabilizable(pf, gef(pf, !o.sequential));
  if (!st.stabilizable) {
    emit(synth_report(pf, st, nullptr, {}, format_of(o.report)), o.output);
    std::cerr << "plant is not stabilizable\n";
    return kNegative;
  }
  ControllerResult res = synthesize(pf, st);
  ReportExtras extras;
  extras.transpose_duality = transpose_duality_check(pf.P, res.C, pf.ring);
  extras.causality = causality_check(pf, res);
  if (o.timing)
    extras.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  emit(synth_report(pf, st, &res, extras, format_of(o.report)), o.output);
  if (!res.verification.stabilizing || !*extras.transpose_duality) {
    std::cerr << "internal check failed on the synthesized controller\n";
    return kInternal;
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  PlantSpec plant = load_plant(o.plant);
  FracMat C = load_controller(o.controller, plant);
  VerificationReport v = verify_stabilizing(plant.P, C, plant.ring);
  emit(verify_report(v, format_of(o.report)), o.output);
  if (!v.well_posed) std::cerr << "det(E+PC) = 0\n";
  return v.stabilizing ? kOk : kNegative;
}

int cmd_simulate(const Options& o) {
  PlantSpec plant = load_plant(o.plant);
  if (!plant.ring.univariate()) throw InputError("simulation needs a univariate delay ring");
  FracMat C = load_controller(o.controller, plant);
  const std::size_t n = plant.P.rows(), m = plant.P.cols();
  SignalTrace tr;
  if (o.input == "file") {
    if (o.input_file.empty()) throw InputError("--input file needs --input-file");
    InputTrace in = load_input_csv(o.input_file, n, m);
    in.u1.resize(o.steps, std::vector<Rational>(n));
    in.u2.resize(o.steps, std::vector<Rational>(m));
    tr = simulate_loop(plant.P, C, in.u1, in.u2, o.steps);
  } else {
    if (o.channel < 1 || o.channel > n + m) throw InputError("--channel must be in 1.." + std::to_string(n + m));
    tr = simulate_impulse(plant.P, C, o.channel - 1, o.steps);
  }
  std::ostringstream os;
  write_csv(os, tr);
  emit(os.str(), o.output);
  if (!loop_equations_hold(tr)) throw InternalError("loop equations violated");
  if (o.compare) {
    CompareReport c = compare_to_H(plant.P, C, o.steps);
    if (!c.equal) {
      std::cerr << "time/frequency mismatch: " << c.first_mismatch << "\n";
      return kNegative;
    }
    std::cerr << "simulation agrees with H(P,C) over " << o.steps << " steps\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stabilizability test and controller synthesis over delay rings"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("plant", o.plant, "plant JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--report", o.report, "report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("-o,--output", o.output, "write output here instead of stdout");
  };

  auto* g = app.add_subcommand("gef", "generalized elementary factors of the plant");
  add_common(g);
  g->add_flag("--sequential", o.sequential, "no parallel factor computation");

  auto* c = app.add_subcommand("check", "decide stabilizability");
  add_common(c);
  c->add_flag("--sequential", o.sequential, "no parallel factor computation");

  auto* s = app.add_subcommand("synth", "synthesize a stabilizing controller");
  add_common(s);
  s->add_flag("--timing", o.timing, "include wall time in the report");
  s->add_flag("--sequential", o.sequential, "no parallel factor computation");

  auto* v = app.add_subcommand("verify", "check that a controller stabilizes the plant");
  add_common(v);
  v->add_option("controller", o.controller, "controller JSON or synthesis report")->required()->check(CLI::ExistingFile);

  auto* sim = app.add_subcommand("simulate", "simulate the closed loop and write a CSV trace");
  add_common(sim);
  sim->add_option("controller", o.controller, "controller JSON or synthesis report")->required()->check(CLI::ExistingFile);
  sim->add_option("--steps", o.steps, "number of time steps")->check(CLI::Range(1, 100000));
  sim->add_option("--input", o.input, "input signal")->check(CLI::IsMember({"impulse", "file"}));
  sim->add_option("--input-file", o.input_file, "CSV with columns u1_i, u2_j")->check(CLI::ExistingFile);
  sim->add_option("--channel", o.channel, "impulse channel, u1 channels first (1-based)");
  sim->add_flag("--compare", o.compare, "also compare impulse responses against H(P,C)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (g->parsed()) return cmd_gef(o);
    if (c->parsed()) return cmd_check(o);
    if (s->parsed()) return cmd_synth(o);
    if (v->parsed()) return cmd_verify(o);
    if (sim->parsed()) return cmd_simulate(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const IllPosed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
