#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "gefstab/synth.hpp"

namespace gefstab {

struct PlantSpec {
  RingModel ring;
  FracMat P;  // outputs x inputs
};

// JSON plant file; throws InputError on any schema or grammar problem.
PlantSpec parse_plant(const std::string& text);
PlantSpec load_plant(const std::string& path);

// Either a bare controller object or a synthesis report carrying one.
FracMat parse_controller(const std::string& text, const PlantSpec& plant);
FracMat load_controller(const std::string& path, const PlantSpec& plant);

std::string controller_json(const FracMat& C);

// u1 and u2 samples per step from a CSV with columns u1_1..u1_n,u2_1..u2_m.
struct InputTrace {
  std::vector<std::vector<Rational>> u1, u2;
};
InputTrace load_input_csv(const std::string& path, std::size_t n, std::size_t m);

enum class ReportFormat { Json, Text };

struct ReportExtras {
  std::optional<bool> transpose_duality;
  std::optional<CausalityReport> causality;
  std::optional<double> elapsed_ms;  // only printed when set
};

std::string gef_report(const PlantFraction& pf, const GefResult& g, ReportFormat fmt);
std::string synth_report(const PlantFraction& pf, const StabilizabilityResult& st, const ControllerResult* ctrl,
                         const ReportExtras& extras, ReportFormat fmt);
std::string verify_report(const VerificationReport& v, ReportFormat fmt);

std::string read_file(const std::string& path);

}  // namespace gefstab
