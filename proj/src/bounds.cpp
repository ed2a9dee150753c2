#include "icf/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "icf/error.hpp"

namespace icf {

namespace {

constexpr double kGnFloor = 1e-12;

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double vertex_weight(const CurveMetrics& m, std::size_t i) {
  const std::size_t n = m.size();
  return 0.5 * (m.edge_lengths[(i + n - 1) % n] + m.edge_lengths[i]);
}

}  // namespace

double curvature_sup_bound_check(const CurveMetrics& metrics, double time, double tbar) {
  const double k = metrics.max_curvature();
  const double bound = 1.0 + 2.0 * std::exp(-2.0 * (time - tbar));
  return std::max(0.0, k * k - bound);
}

double kappa_minmax_check(std::span<const CurveMetrics> history) {
  if (history.empty()) return 0.0;
  const double lo = history.front().min_curvature();
  const double hi = history.front().max_curvature();
  double worst = 0.0;
  for (const auto& m : history) {
    worst = std::max({worst, lo - m.min_curvature(), m.max_curvature() - hi});
  }
  return worst;
}

double l2_deficit(const CurveMetrics& metrics) {
  double sum = 0.0;
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    const double d = metrics.curvature[i] - 1.0;
    sum += d * d * vertex_weight(metrics, i);
  }
  return sum;
}

RateFit fit_log_rate(std::span<const double> times, std::span<const double> values, double t_lo,
                     double t_hi, double floor) {
  if (times.size() != values.size()) throw ParameterError("times and values differ in length");
  double st = 0.0, sv = 0.0, stt = 0.0, stv = 0.0;
  std::size_t n = 0;
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (times[k] < t_lo || times[k] > t_hi || !(values[k] > floor)) continue;
    const double lv = std::log(values[k]);
    st += times[k];
    sv += lv;
    stt += times[k] * times[k];
    stv += times[k] * lv;
    ++n;
  }
  if (n < 2) throw NoiseFloorError("fewer than two values above the noise floor in the fit window");
  const double dn = static_cast<double>(n);
  const double denom = dn * stt - st * st;
  if (!(denom > 0.0)) throw NoiseFloorError("fit window holds a single time");
  RateFit fit;
  fit.slope = (dn * stv - st * sv) / denom;
  fit.intercept = (sv - fit.slope * st) / dn;
  fit.points = n;
  return fit;
}

RateFit deficit_decay_check(std::span<const double> times, std::span<const double> deficits) {
  return fit_log_rate(times, deficits, 1.0, 5.0, 1e-14);
}

std::vector<double> arc_derivative(const CurveMetrics& metrics, std::span<const double> values) {
  const std::size_t n = metrics.size();
  if (values.size() != n) throw ParameterError("value array does not match the mesh");
  if (metrics.nonuniformity() > kUniformMeshTolerance) {
    throw ParameterError("arc-length derivatives need a uniform mesh (deviation " +
                         std::to_string(metrics.nonuniformity()) + ")");
  }
  const double h = metrics.total_length / static_cast<double>(n);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = (values[(i + 1) % n] - values[(i + n - 1) % n]) / (2.0 * h);
  }
  return out;
}

DerivativeNorms derivative_norms(const CurveMetrics& metrics) {
  const auto d1 = arc_derivative(metrics, metrics.curvature);
  const auto d2 = arc_derivative(metrics, d1);
  return {max_abs(d1), max_abs(d2)};
}

DerivativeDecayResult derivative_decay_check(std::span<const DecaySample> samples,
                                             const DecayWindows& w) {
  DerivativeDecayResult r;
  bool calibrated = false;
  for (const auto& s : samples) {
    if (s.time < w.calibration_lo || s.time > w.calibration_hi) continue;
    r.dkappa_constant = std::max(r.dkappa_constant, s.dkappa_max * std::max(1.0, std::sqrt(s.time)));
    r.d2kappa_constant = std::max(r.d2kappa_constant, s.d2kappa_max * std::max(1.0, s.time));
    calibrated = true;
  }
  if (!calibrated) throw ParameterError("no snapshots inside the calibration window");

  std::vector<double> times, dk;
  for (const auto& s : samples) {
    // Samples under the noise floor count as bounded.
    if (s.time >= w.calibration_lo && s.dkappa_max > w.floors.dkappa) {
      r.dkappa_worst = std::max(r.dkappa_worst, s.dkappa_max * std::max(1.0, std::sqrt(s.time)));
    }
    if (s.time >= w.calibration_lo && s.d2kappa_max > w.floors.d2kappa) {
      r.d2kappa_worst = std::max(r.d2kappa_worst, s.d2kappa_max * std::max(1.0, s.time));
    }
    times.push_back(s.time);
    dk.push_back(s.dkappa_max);
  }
  r.dkappa_bounded = r.dkappa_worst <= w.growth_allowance * r.dkappa_constant;
  r.d2kappa_bounded = r.d2kappa_worst <= w.growth_allowance * r.d2kappa_constant;
  try {
    r.dkappa_rate = fit_log_rate(times, dk, w.rate_lo, w.rate_hi, w.floors.dkappa);
    r.dkappa_decays = r.dkappa_rate.slope <= w.max_slope;
  } catch (const NoiseFloorError&) {
    // Already below the floor over the whole window: nothing left to decay.
    r.dkappa_decays = true;
  }
  return r;
}

NoiseFloors derivative_noise_floors(std::size_t n, double length) {
  if (n == 0 || !(length > 0.0)) throw ParameterError("noise floors need a non-empty curve");
  constexpr double kMargin = 100.0;
  const double eps = kMargin * std::numeric_limits<double>::epsilon() * length / (2.0 * std::numbers::pi);
  const double ds = length / static_cast<double>(n);
  return {eps / (ds * ds * ds), eps / (ds * ds * ds * ds)};
}

double gn_ratio(const CurveMetrics& metrics) {
  const DerivativeNorms d = derivative_norms(metrics);
  const double l2 = std::sqrt(l2_deficit(metrics));
  const NoiseFloors floors = derivative_noise_floors(metrics.size(), metrics.total_length);
  if (d.dkappa_max <= floors.dkappa || d.d2kappa_max <= floors.d2kappa || l2 < kGnFloor) {
    throw NoiseFloorError("interpolation ratio undefined on a (near) circle");
  }
  return d.dkappa_max / (std::pow(d.d2kappa_max, 0.6) * std::pow(l2, 0.4));
}

double bonnesen_deficit(const DiscreteCurve& curve) {
  if (!convexity_check(curve)) throw ParameterError("incircle/circumcircle gap needs a convex curve");
  const Vec2 c = centroid(curve);
  double r_in = std::numeric_limits<double>::infinity();
  double r_out = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const double r = distance(c, curve.vertex(i));
    r_in = std::min(r_in, r);
    r_out = std::max(r_out, r);
  }
  return 1.0 / r_in - 1.0 / r_out;
}

ConvergenceMetrics convergence_metrics(const DiscreteCurve& curve) {
  const Vec2 c = centroid(curve);
  ConvergenceMetrics out;
  out.center_norm = norm(c);
  for (std::size_t i = 0; i < curve.size(); ++i) {
    out.hausdorff_to_unit_circle =
        std::max(out.hausdorff_to_unit_circle, std::abs(distance(c, curve.vertex(i)) - 1.0));
  }
  return out;
}

BoundsReport make_bounds_report(const DiscreteCurve& curve, const CurveMetrics& metrics,
                                double time, double tbar) {
  BoundsReport r;
  r.time = time;
  r.kappa_max = metrics.max_curvature();
  r.kappa_min = metrics.min_curvature();
  r.thm12_residual = curvature_sup_bound_check(metrics, time, tbar);
  r.l2_deficit = l2_deficit(metrics);
  const DerivativeNorms d = derivative_norms(metrics);
  r.dkappa_max = d.dkappa_max;
  r.d2kappa_max = d.d2kappa_max;
  try {
    r.gn_ratio = gn_ratio(metrics);
  } catch (const NoiseFloorError&) {
    r.gn_ratio = std::numeric_limits<double>::quiet_NaN();
  }
  r.bonnesen_gap = bonnesen_deficit(curve);
  const ConvergenceMetrics c = convergence_metrics(curve);
  r.hausdorff_to_unit_circle = c.hausdorff_to_unit_circle;
  r.center_norm = c.center_norm;
  return r;
}

}  // namespace icf
