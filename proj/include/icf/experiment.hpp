#pragma once

// Experiment runner behind the command-line tool: builds an initial curve,
// runs the flow, feeds every snapshot to the verifiers and writes the
// time-series CSV, summary JSON and optional SVG snapshots.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "icf/bounds.hpp"
#include "icf/comparison.hpp"
#include "icf/curve.hpp"

namespace icf {

enum class Shape { circle, ellipse, perturbed_circle, star, polygon };
enum class RunMode { normalized, unnormalized, both };

struct ExperimentConfig {
  Shape shape = Shape::ellipse;
  double radius = 1.0;
  Vec2 center{};
  double a = 2.0;
  double b = 1.0;
  std::vector<RadialMode> perturbation;  // perturbed_circle
  double star_outer = 1.0;
  double star_inner = 0.4;
  int star_petals = 4;
  std::vector<Vec2> vertices;  // polygon
  std::size_t n = 512;
  double dt = 1e-4;
  double t_end = 5.0;
  RunMode mode = RunMode::normalized;
  double snapshot_interval = 0.05;
  int resample_every = 10;
  double safety = 0.2;
  std::vector<std::string> checks;  // empty: every check that applies to the mode
  std::map<std::string, double> tolerances;
  std::uint64_t seed = 0;
  std::filesystem::path out = "icf_out";
  std::optional<std::filesystem::path> svg_dir;

  /// Raises ParameterError on any invalid field.
  void validate() const;
};

/// Parses the JSON config format; unknown keys are rejected.
ExperimentConfig parse_config(std::string_view json_text);

DiscreteCurve build_initial_curve(const ExperimentConfig& config);

/// Names of the checks enabled by default for a mode.
std::vector<std::string> default_checks(RunMode mode);

/// Default tolerance of a check.
double default_tolerance(const std::string& check);

struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFlowError = 3;

struct RunResult {
  int exit_code = kExitPass;
  double tbar = 0.0;
  std::vector<CheckResult> checks;
  std::vector<BoundsReport> reports;
  std::vector<double> min_z;
  std::vector<double> lengths;
  std::optional<double> failure_time;
  std::string failure;
};

/// Runs one experiment and writes its files under config.out.
RunResult run_experiment(const ExperimentConfig& config);

/// Exact CSV header of the time-series file.
std::string_view csv_header();

struct ProfileVerification {
  GridMinimum lf;
  DlfCheck dlf;
  PolynomialMinimum a;
  ProfileDerivativeErrors derivatives;
  std::vector<double> lf_near_zero;  // Lf(1e-6, t) for t in {-3, 0, 3}
  bool passed = false;
};

/// Profile certificates over a grid; prints a report to `out`.
ProfileVerification verify_profile(const ProfileGrid& grid, const PolynomialGrid& poly,
                                   std::ostream& out);

/// Formats a double with 17 significant digits ("nan" and "inf" spelled out).
std::string format_double(double v);

}  // namespace icf
