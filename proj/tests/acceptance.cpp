// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "icf/bounds.hpp"
#include "icf/comparison.hpp"
#include "icf/curve.hpp"
#include "icf/error.hpp"
#include "icf/experiment.hpp"
#include "icf/flow.hpp"

using namespace icf;
namespace fs = std::filesystem;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    passed = passed && ok;
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "[x] ") + what;
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("icf_acceptance_" + name);
  fs::remove_all(p);
  return p;
}

ExperimentConfig flagship(const std::string& dir) {
  ExperimentConfig c;
  c.shape = Shape::ellipse;
  c.a = 2.0;
  c.b = 1.0;
  c.n = 512;
  c.dt = 1e-4;
  c.t_end = 5.0;
  c.mode = RunMode::normalized;
  c.out = scratch(dir);
  return c;
}

double max_radius_error(const DiscreteCurve& c, double radius) {
  double e = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) e = std::max(e, std::abs(norm(c.vertex(i)) - radius));
  return e;
}

Outcome profile_certificates() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const ProfileGrid grid;  // x in [1e-3, pi] step 1e-3, t in [-5, 5] step 0.01
  const GridMinimum lf = lf_grid_min(grid);
  o.require(lf.value >= -1e-8, "min Lf = " + num(lf.value));
  const DlfCheck d = dlf_check(grid);
  o.require(d.finite_difference.value >= -1e-8, "min dLf/dx (fd) = " + num(d.finite_difference.value));
  const PolynomialMinimum a = a_polynomial_grid_min({});
  o.require(a.value >= 0.0, "min A = " + num(a.value));
  double near_zero = 0.0;
  for (double t : {-3.0, 0.0, 3.0}) near_zero = std::max(near_zero, std::abs(lf_value({1e-6, t})));
  o.require(near_zero < 1e-5, "max |Lf(1e-6, t)| = " + num(near_zero));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 5.0, "time " + num(secs) + " s");
  return o;
}

Outcome exact_solution() {
  Outcome o;
  const StepControl control{1e-3, 10, kDefaultSafety};
  FlowState s = FlowState::unnormalized(make_circle(1.0, 512));
  double radius = 1.0, worst_step = 0.0, worst_total = 0.0, product = 1.0;
  std::size_t steps = 0;
  while (s.time < 1.0) {
    const double h = std::min({control.dt, stable_dt(compute_metrics(s.curve), control.safety), 1.0 - s.time});
    const double before = radius;
    s = step_unnormalized(s, {h, control.resample_every, control.safety});
    worst_step = std::max(worst_step, max_radius_error(s.curve, before * (1.0 + h)));
    product *= 1.0 + h;
    radius = before * (1.0 + h);
    ++steps;
  }
  worst_total = max_radius_error(s.curve, product) / product;
  const double ratio = polygon_length(s.curve) / s.initial_length;
  o.require(std::abs(ratio / std::exp(1.0) - 1.0) < 1e-2, "L(1)/L(0) / e - 1 = " + num(ratio / std::exp(1.0) - 1.0));
  o.require(worst_step < 1e-12, "max per-step radius error " + num(worst_step) + " over " + std::to_string(steps) + " steps");
  o.require(worst_total < 1e-12, "relative radius error vs R prod(1 + dt) " + num(worst_total));
  return o;
}

Outcome fixed_point() {
  Outcome o;
  const auto unit = make_circle(1.0, 512);
  const FlowState end = evolve(FlowState::normalized(unit), {1e-3, 10, kDefaultSafety}, 5.0, {});
  const double drift = hausdorff_distance(end.curve, renormalize(unit));
  o.require(drift < 1e-6, "unit circle drift to t = 5: " + num(drift));

  const auto off = renormalize(make_circle(1.0, 512)).translated({0.1, 0.0});
  const FlowState moved = evolve(FlowState::normalized(off), {1e-3, 10, kDefaultSafety}, 3.0, {});
  const double cn = convergence_metrics(moved.curve).center_norm;
  const double expected = 0.1 * std::exp(-3.0);
  o.require(std::abs(cn / expected - 1.0) <= 0.1, "center_norm(3) / (0.1 e^-3) = " + num(cn / expected));
  return o;
}

struct Flagship {
  ExperimentConfig config;
  RunResult result;
};

Outcome flagship_run(const Flagship& f) {
  Outcome o;
  const RunResult& r = f.result;
  o.require(!r.failure_time.has_value(), "run completed");
  if (r.reports.empty()) return o;
  o.require(r.reports.back().time == 5.0, "t_end = " + num(r.reports.back().time));
  o.require(std::isfinite(r.tbar), "tbar = " + num(r.tbar));

  const double min_z = *std::min_element(r.min_z.begin(), r.min_z.end());
  o.require(min_z >= -5e-3, "min Z = " + num(min_z));

  double thm12 = 0.0, l2_excess = -1e300;
  std::vector<double> t, l2, gap;
  for (const auto& b : r.reports) {
    thm12 = std::max(thm12, b.thm12_residual);
    l2_excess = std::max(l2_excess, b.l2_deficit - 2.0 * std::exp(-2.0 * (b.time - r.tbar)));
    t.push_back(b.time);
    l2.push_back(b.l2_deficit);
    gap.push_back(b.bonnesen_gap);
  }
  o.require(thm12 <= 1e-2, "max curvature-bound residual " + num(thm12));

  const auto kappa = std::find_if(r.checks.begin(), r.checks.end(), [](const auto& c) { return c.name == "kappa_range"; });
  o.require(kappa != r.checks.end() && kappa->worst <= 1e-3,
            "curvature range violation " + num(kappa == r.checks.end() ? NAN : kappa->worst));
  o.require(l2_excess <= 1e-3, "max L2 deficit - 2e^{-2(t - tbar)} = " + num(l2_excess));

  // Fits skip the discretization floor of a length-2pi polygon (circumradius above 1).
  const double h = std::numbers::pi / static_cast<double>(f.config.n);
  const double floor = 4.0 * kTwoPi * std::pow(1.0 - std::sin(h) / h, 2);
  const RateFit l2_fit = fit_log_rate(t, l2, 1.0, 5.0, std::max(1e-14, floor));
  o.require(l2_fit.slope <= -1.8, "L2 log-slope " + num(l2_fit.slope) + " (" + std::to_string(l2_fit.points) + " pts)");
  const RateFit gap_fit = fit_log_rate(t, gap, 1.0, 4.0, 1e-12);
  o.require(gap_fit.slope <= -0.8, "gap log-slope " + num(gap_fit.slope));

  const BoundsReport& last = r.reports.back();
  const double kdev = std::max(std::abs(last.kappa_max - 1.0), std::abs(last.kappa_min - 1.0));
  o.require(kdev <= 0.02, "max |kappa - 1| at t = 5: " + num(kdev));
  return o;
}

Outcome derivative_ladder(const Flagship& f) {
  Outcome o;
  std::vector<DecaySample> s;
  for (const auto& b : f.result.reports) s.push_back({b.time, b.dkappa_max, b.d2kappa_max});
  if (s.empty()) {
    o.require(false, "no snapshots");
    return o;
  }
  DecayWindows w;
  w.floors = derivative_noise_floors(f.config.n, kTwoPi);
  const DerivativeDecayResult d = derivative_decay_check(s, w);
  o.require(d.dkappa_bounded, "|Dk| max(1, sqrt t): worst " + num(d.dkappa_worst) + " vs 1.5 x " + num(d.dkappa_constant));
  o.require(d.d2kappa_bounded, "|D2k| max(1, t): worst " + num(d.d2kappa_worst) + " vs 1.5 x " + num(d.d2kappa_constant));
  o.require(d.dkappa_decays, "log |Dk| slope on [2, 5] " + num(d.dkappa_rate.slope));
  return o;
}

struct Resolution {
  double cross = 0.0;
  double range = 0.0;
  double z_deficit = 0.0;
};

Resolution resolve(std::size_t n, double dt) {
  Resolution r;
  const auto initial = make_ellipse(2.0, 1.0, n);
  const StepControl control{dt, 10, kDefaultSafety};
  r.cross = cross_check_formulations(initial, control, 1.0, 0.05).max_distance;
  const DiscreteCurve start = renormalize(initial);
  const double tbar = compute_tbar(start);
  std::vector<CurveMetrics> history;
  double min_z = 0.0;
  const SnapshotObserver obs = [&](double t, const DiscreteCurve& c, const CurveMetrics& m) {
    history.push_back(m);
    min_z = std::min(min_z, min_Z_scan(c, t, tbar).min_Z);
  };
  evolve(FlowState::normalized(initial), control, 1.0, std::span(&obs, 1), {0.05});
  r.range = kappa_minmax_check(history);
  r.z_deficit = std::max(0.0, -min_z);
  return r;
}

Outcome refinement() {
  Outcome o;
  const Resolution coarse = resolve(256, 1e-4);
  const Resolution fine = resolve(512, 5e-5);
  o.require(fine.cross * 1.8 <= coarse.cross,
            "cross-check " + num(coarse.cross) + " -> " + num(fine.cross) + " (x" + num(coarse.cross / fine.cross) + ")");
  o.require(fine.range * 1.8 <= coarse.range,
            "curvature range violation " + num(coarse.range) + " -> " + num(fine.range));
  o.require(fine.z_deficit * 1.8 <= coarse.z_deficit,
            "min Z deficit " + num(coarse.z_deficit) + " -> " + num(fine.z_deficit));
  return o;
}

Outcome negative_controls() {
  Outcome o;
  ExperimentConfig star;
  star.shape = Shape::star;
  star.out = scratch("star");
  const RunResult r = run_experiment(star);
  o.require(r.exit_code == kExitFlowError && r.failure_time == 0.0, "star exit " + std::to_string(r.exit_code));
  const auto e = renormalize(make_ellipse(2.0, 1.0, 512));
  const double tbar = compute_tbar(e);
  const double z = min_Z_scan(e, 0.0, tbar - 0.01).min_Z;
  o.require(z < 0.0, "min Z with tbar - 0.01: " + num(z));
  const double res = curvature_sup_bound_check(compute_metrics(e), 0.0, -50.0);
  o.require(res > 0.0, "kappa^2 <= 1 residual " + num(res));
  return o;
}

Outcome determinism(const Flagship& first) {
  Outcome o;
  const ExperimentConfig again = flagship("flagship_b");
  run_experiment(again);
  for (const char* file : {"timeseries.csv", "summary.json"}) {
    const std::string a = slurp(first.config.out / file), b = slurp(again.out / file);
    o.require(!a.empty() && a == b, std::string(file) + (a == b ? " identical" : " differs"));
  }
  return o;
}

int report(int id, const char* title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.passed = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s criterion %d: %s [%.1f s] %s\n", o.passed ? "PASS" : "FAIL", id, title, secs, o.detail.c_str());
  std::fflush(stdout);
  return o.passed ? 0 : 1;
}

}  // namespace

int main() {
  int failures = 0;
  failures += report(1, "profile certificates", profile_certificates);
  failures += report(2, "exact unnormalized circle", exact_solution);
  failures += report(3, "normalized fixed point", fixed_point);

  Flagship f{flagship("flagship_a"), {}};
  const auto t0 = std::chrono::steady_clock::now();
  f.result = run_experiment(f.config);
  std::printf("flagship run: %.1f s, tbar = %.9f, exit %d\n",
              std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), f.result.tbar,
              f.result.exit_code);
  failures += report(4, "flagship ellipse (2,1)", [&] { return flagship_run(f); });
  failures += report(5, "derivative decay ladder", [&] { return derivative_ladder(f); });
  failures += report(6, "refinement consistency", refinement);
  failures += report(7, "negative controls", negative_controls);
  failures += report(8, "determinism", [&] { return determinism(f); });
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
