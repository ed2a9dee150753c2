#pragma once

// Explicit time integration of the expanding flow dF/dt = nu / kappa and of
// its length-normalized form dF/dt = -F + nu / kappa.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "icf/curve.hpp"

namespace icf {

enum class FlowMode { unnormalized, normalized };

/// Default scale for the stability bound dt <= safety * (min edge)^2 * (min kappa)^2.
inline constexpr double kDefaultSafety = 0.2;

/// Time-step control. `dt` is the largest step the integrator may take; steps
/// handed directly to step_unnormalized / step_normalized must also satisfy
/// the stability bound or they are rejected.
struct StepControl {
  double dt = 1e-4;
  int resample_every = 10;
  double safety = kDefaultSafety;

  void validate() const;
};

struct FlowState {
  DiscreteCurve curve;
  double time = 0.0;
  FlowMode mode = FlowMode::normalized;
  double initial_length = 0.0;
  std::optional<double> tbar;
  /// Steps since the last uniform resampling.
  int steps_since_resample = 0;

  /// Unnormalized state starting from `curve` as given.
  static FlowState unnormalized(DiscreteCurve curve);
  /// Normalized state; `curve` is rescaled about the origin to length 2pi.
  static FlowState normalized(const DiscreteCurve& curve);
};

/// Largest step the stability bound allows for this geometry.
double stable_dt(const CurveMetrics& metrics, double safety);

/// Scale about the origin so the total length becomes 2pi.
DiscreteCurve renormalize(const DiscreteCurve& curve);

FlowState step_unnormalized(const FlowState& state, const StepControl& control);
FlowState step_normalized(const FlowState& state, const StepControl& control);

/// Receives (time, curve, metrics) at every snapshot; must not retain references.
using SnapshotObserver =
    std::function<void(double time, const DiscreteCurve& curve, const CurveMetrics& metrics)>;

struct SnapshotSchedule {
  /// Observers fire at t0, t0 + interval, ... and at t_end. Zero disables
  /// intermediate snapshots.
  double interval = 0.0;
};

/// Integrates to t_end with sub-steps min(control.dt, stable_dt) that land
/// exactly on snapshot times. The curve is resampled to a uniform mesh every
/// `resample_every` steps and at each snapshot, so observers always see a
/// uniform mesh. Step failures are rethrown as FlowError carrying the time.
FlowState evolve(FlowState state, const StepControl& control, double t_end,
                 std::span<const SnapshotObserver> observers, SnapshotSchedule schedule = {});

/// max |L(t) - L(0) e^t| / (L(0) e^t) over a history of (time, length).
double length_law_residual(std::span<const std::pair<double, double>> history);

struct CrossCheckResult {
  double max_distance = 0.0;
  std::vector<double> times;
  std::vector<double> distances;
};

/// Runs both formulations from `initial` and compares the rescaled
/// unnormalized curves with the normalized ones at every snapshot by
/// Hausdorff distance.
CrossCheckResult cross_check_formulations(const DiscreteCurve& initial, const StepControl& control,
                                          double t_end, double snapshot_interval);

}  // namespace icf
