#pragma once

// Verifiers for the decay and bound statements along a normalized run:
// curvature sup bound, curvature range preservation, L2 deficit decay,
// derivative decay, Gagliardo-Nirenberg ratio, incircle/circumcircle gap,
// and distance to the unit circle.

#include <cstddef>
#include <span>
#include <vector>

#include "icf/curve.hpp"

namespace icf {

/// Largest relative edge-length deviation accepted as a uniform mesh.
inline constexpr double kUniformMeshTolerance = 1e-3;

struct BoundsReport {
  double time = 0.0;
  double kappa_max = 0.0;
  double kappa_min = 0.0;
  double thm12_residual = 0.0;
  double l2_deficit = 0.0;
  double dkappa_max = 0.0;
  double d2kappa_max = 0.0;
  double gn_ratio = 0.0;  // NaN below the noise floor
  double bonnesen_gap = 0.0;
  double hausdorff_to_unit_circle = 0.0;
  double center_norm = 0.0;
};

/// max(0, max kappa^2 - 1 - 2 e^{-2(t - tbar)}).
double curvature_sup_bound_check(const CurveMetrics& metrics, double time, double tbar);

/// Largest excursion of the curvature outside [min kappa, max kappa] of the
/// first snapshot, over all snapshots.
double kappa_minmax_check(std::span<const CurveMetrics> history);

/// Sum of (kappa_i - 1)^2 weighted by the arc length of each vertex.
double l2_deficit(const CurveMetrics& metrics);

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t points = 0;
};

/// Least-squares fit of log(value) against time over [t_lo, t_hi], skipping
/// values at or below `floor`. Raises NoiseFloorError with fewer than two
/// usable points.
RateFit fit_log_rate(std::span<const double> times, std::span<const double> values, double t_lo,
                     double t_hi, double floor);

/// Log-slope of the L2 deficit over t in [1, 5] (floor 1e-14).
RateFit deficit_decay_check(std::span<const double> times, std::span<const double> deficits);

/// Periodic central difference in arc length; the mesh must be uniform.
std::vector<double> arc_derivative(const CurveMetrics& metrics, std::span<const double> values);

struct DerivativeNorms {
  double dkappa_max = 0.0;
  double d2kappa_max = 0.0;
};

/// max |D kappa| and max |D^2 kappa|; the second derivative applies the
/// central stencil twice.
DerivativeNorms derivative_norms(const CurveMetrics& metrics);

/// Round-off level of the finite-difference curvature derivatives on a
/// uniform mesh of n vertices and total length `length`: a relative position
/// error eps moves D kappa by about eps / ds^3 and D^2 kappa by eps / ds^4.
struct NoiseFloors {
  double dkappa = 1e-12;
  double d2kappa = 1e-12;
};
NoiseFloors derivative_noise_floors(std::size_t n, double length);

struct DecaySample {
  double time = 0.0;
  double dkappa_max = 0.0;
  double d2kappa_max = 0.0;
};

struct DecayWindows {
  double calibration_lo = 0.5;
  double calibration_hi = 2.0;
  double growth_allowance = 1.5;
  double rate_lo = 2.0;
  double rate_hi = 5.0;
  double max_slope = -0.3;
  NoiseFloors floors;  // samples at or below these count as bounded and leave the fit
};

struct DerivativeDecayResult {
  double dkappa_constant = 0.0;   // calibration max of |D kappa| max(1, sqrt t)
  double d2kappa_constant = 0.0;  // calibration max of |D^2 kappa| max(1, t)
  double dkappa_worst = 0.0;      // worst weighted value from calibration_lo on
  double d2kappa_worst = 0.0;
  RateFit dkappa_rate;
  bool dkappa_bounded = false;
  bool d2kappa_bounded = false;
  bool dkappa_decays = false;

  bool passed() const { return dkappa_bounded && d2kappa_bounded && dkappa_decays; }
};

DerivativeDecayResult derivative_decay_check(std::span<const DecaySample> samples,
                                             const DecayWindows& windows = {});

/// |D kappa|_inf / (|D^2 kappa|_inf^{3/5} |kappa - 1|_2^{2/5}). Raises
/// NoiseFloorError when a derivative is at its round-off level or the deficit
/// is below 1e-12.
double gn_ratio(const CurveMetrics& metrics);

/// 1 / r_in - 1 / r_out with radii the nearest and farthest vertex distance
/// from the centroid. Raises ParameterError for non-convex curves.
double bonnesen_deficit(const DiscreteCurve& curve);

struct ConvergenceMetrics {
  double hausdorff_to_unit_circle = 0.0;  // max | |v - centroid| - 1 |
  double center_norm = 0.0;
};

ConvergenceMetrics convergence_metrics(const DiscreteCurve& curve);

/// Every per-snapshot quantity above for one normalized snapshot.
BoundsReport make_bounds_report(const DiscreteCurve& curve, const CurveMetrics& metrics,
                                double time, double tbar);

}  // namespace icf
