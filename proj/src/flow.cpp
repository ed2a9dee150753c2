#include "icf/flow.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "icf/error.hpp"
#include "icf/kernels.hpp"

namespace icf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_positive_curvature(const CurveMetrics& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!(m.curvature[i] > 0.0)) {
      throw ConvexityLossError("non-positive curvature " + std::to_string(m.curvature[i]) +
                               " at vertex " + std::to_string(i));
    }
  }
}

// One explicit Euler step of size dt from a state whose metrics are known.
FlowState advance(const FlowState& state, const CurveMetrics& m, double dt,
                  const StepControl& control) {
  require_positive_curvature(m);
  const double bound = stable_dt(m, control.safety);
  if (!(dt > 0.0)) throw ParameterError("time step must be positive");
  if (dt > bound) {
    throw StepRejectedError("time step " + std::to_string(dt) + " exceeds stability bound " +
                                std::to_string(bound),
                            dt, bound);
  }

  const std::size_t n = state.curve.size();
  std::vector<double> x(state.curve.xs().begin(), state.curve.xs().end());
  std::vector<double> y(state.curve.ys().begin(), state.curve.ys().end());
  const double shrink = state.mode == FlowMode::normalized ? 1.0 : 0.0;
  kernels::active().advance(x.data(), y.data(), m.normal_x.data(), m.normal_y.data(),
                            m.curvature.data(), n, dt, shrink);

  FlowState next{DiscreteCurve(std::move(x), std::move(y)), state.time + dt, state.mode,
                 state.initial_length, state.tbar, state.steps_since_resample + 1};
  if (next.steps_since_resample >= control.resample_every) {
    next.curve = resample_uniform(next.curve, n);
    next.steps_since_resample = 0;
  }
  if (next.mode == FlowMode::normalized) next.curve = renormalize(next.curve);
  if (!convexity_check(next.curve)) {
    throw ConvexityLossError("curve lost convexity at t = " + std::to_string(next.time));
  }
  return next;
}

FlowState checked_step(const FlowState& state, const StepControl& control, FlowMode expected) {
  control.validate();
  if (state.mode != expected) throw ParameterError("flow state has the wrong mode for this step");
  return advance(state, compute_metrics(state.curve, MetricsLevel::kinematic), control.dt,
                 control);
}

// Resamples onto a uniform mesh (and restores length 2pi in normalized mode).
void make_uniform(FlowState& state) {
  state.curve = resample_uniform(state.curve, state.curve.size());
  if (state.mode == FlowMode::normalized) state.curve = renormalize(state.curve);
  state.steps_since_resample = 0;
}

}  // namespace

void StepControl::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ParameterError("dt must be positive");
  if (resample_every < 1) throw ParameterError("resample_every must be at least 1");
  if (!(safety > 0.0) || safety > 1.0) throw ParameterError("safety must lie in (0, 1]");
}

FlowState FlowState::unnormalized(DiscreteCurve curve) {
  const double length = compute_metrics(curve).total_length;
  return FlowState{std::move(curve), 0.0, FlowMode::unnormalized, length, std::nullopt, 0};
}

FlowState FlowState::normalized(const DiscreteCurve& curve) {
  const double length = compute_metrics(curve).total_length;
  return FlowState{renormalize(curve), 0.0, FlowMode::normalized, length, std::nullopt, 0};
}

double stable_dt(const CurveMetrics& m, double safety) {
  const double ds = m.min_edge();
  const double k = m.min_curvature();
  return safety * ds * ds * k * k;
}

DiscreteCurve renormalize(const DiscreteCurve& curve) {
  return curve.scaled(kTwoPi / polygon_length(curve));
}

FlowState step_unnormalized(const FlowState& state, const StepControl& control) {
  return checked_step(state, control, FlowMode::unnormalized);
}

FlowState step_normalized(const FlowState& state, const StepControl& control) {
  return checked_step(state, control, FlowMode::normalized);
}

FlowState evolve(FlowState state, const StepControl& control, double t_end,
                 std::span<const SnapshotObserver> observers, SnapshotSchedule schedule) {
  control.validate();
  if (!(t_end >= state.time)) throw ParameterError("t_end precedes the current flow time");
  if (schedule.interval < 0.0) throw ParameterError("snapshot interval must be non-negative");

  const double t0 = state.time;
  auto notify = [&](const FlowState& s) {
    if (observers.empty()) return;
    const CurveMetrics m = compute_metrics(s.curve);
    for (const auto& obs : observers) obs(s.time, s.curve, m);
  };

  try {
    if (state.steps_since_resample != 0 || compute_metrics(state.curve).nonuniformity() > 1e-9) {
      make_uniform(state);
    }
    notify(state);

    long long snap_index = 1;
    auto next_snapshot = [&] {
      if (schedule.interval <= 0.0) return t_end;
      return std::min(t_end, t0 + static_cast<double>(snap_index) * schedule.interval);
    };
    double target = next_snapshot();

    while (state.time < t_end) {
      const CurveMetrics m = compute_metrics(state.curve, MetricsLevel::kinematic);
      require_positive_curvature(m);
      double h = std::min(control.dt, stable_dt(m, control.safety));
      bool lands = false;
      if (target - state.time <= h) {
        h = target - state.time;
        lands = true;
      }
      state = advance(state, m, h, control);
      if (lands) {
        state.time = target;
        if (state.steps_since_resample != 0) make_uniform(state);
        notify(state);
        ++snap_index;
        target = next_snapshot();
      }
    }
  } catch (const ConvexityLossError& e) {
    throw FlowError(e.what(), state.time, FlowError::Cause::convexity_loss);
  } catch (const StepRejectedError& e) {
    throw FlowError(e.what(), state.time, FlowError::Cause::step_rejected);
  } catch (const DegenerateCurveError& e) {
    throw FlowError(e.what(), state.time, FlowError::Cause::degenerate);
  }
  return state;
}

double length_law_residual(std::span<const std::pair<double, double>> history) {
  if (history.empty()) throw ParameterError("length history is empty");
  const auto [t0, l0] = history.front();
  double worst = 0.0;
  for (const auto& [t, length] : history) {
    const double expected = l0 * std::exp(t - t0);
    worst = std::max(worst, std::abs(length - expected) / expected);
  }
  return worst;
}

CrossCheckResult cross_check_formulations(const DiscreteCurve& initial, const StepControl& control,
                                          double t_end, double snapshot_interval) {
  std::vector<double> times;
  std::vector<DiscreteCurve> rescaled;
  std::vector<DiscreteCurve> normalized;

  const SnapshotObserver record_unnormalized = [&](double t, const DiscreteCurve& c,
                                                   const CurveMetrics& m) {
    times.push_back(t);
    rescaled.push_back(c.scaled(kTwoPi / m.total_length));
  };
  const SnapshotObserver record_normalized = [&](double, const DiscreteCurve& c,
                                                 const CurveMetrics&) { normalized.push_back(c); };

  evolve(FlowState::unnormalized(initial), control, t_end, std::span(&record_unnormalized, 1),
         {snapshot_interval});
  evolve(FlowState::normalized(initial), control, t_end, std::span(&record_normalized, 1),
         {snapshot_interval});

  CrossCheckResult out;
  out.times = times;
  const std::size_t count = std::min(rescaled.size(), normalized.size());
  for (std::size_t k = 0; k < count; ++k) {
    const double d = hausdorff_distance(rescaled[k], normalized[k]);
    out.distances.push_back(d);
    out.max_distance = std::max(out.max_distance, d);
  }
  return out;
}

}  // namespace icf
