#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "icf/bounds.hpp"
#include "icf/comparison.hpp"
#include "icf/curve.hpp"
#include "icf/error.hpp"
#include "icf/flow.hpp"
#include "oracles.hpp"

using namespace icf;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<CurveMetrics> normalized_history(const DiscreteCurve& c, double t_end,
                                             double interval, double dt = 1e-4) {
  std::vector<CurveMetrics> h;
  const SnapshotObserver obs = [&](double, const DiscreteCurve&, const CurveMetrics& m) { h.push_back(m); };
  evolve(FlowState::normalized(c), {dt, 10, 0.2}, t_end, std::span(&obs, 1), {interval});
  return h;
}

DiscreteCurve normalized_at(const DiscreteCurve& c, double t_end) {
  return evolve(FlowState::normalized(c), {1e-4, 10, 0.2}, t_end, {}).curve;
}
}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("curvature sup bound") {
  const auto circle = compute_metrics(make_circle(1.0, 128));
  for (double t : {0.0, 1.0, 5.0}) CHECK(curvature_sup_bound_check(circle, t, 0.0) == 0.0);
  const auto e = renormalize(make_ellipse(2.0, 1.0, 256));
  const auto m = compute_metrics(e);
  // Negative control: with the offset sent to -infinity the bound reads kappa^2 <= 1.
  CHECK(curvature_sup_bound_check(m, 0.0, -50.0) ==
        doctest::Approx(m.max_curvature() * m.max_curvature() - 1.0));
  CHECK(curvature_sup_bound_check(m, 0.0, -50.0) > 0.0);
  CHECK(curvature_sup_bound_check(m, 0.0, compute_tbar(e)) < 1e-2);
}

TEST_CASE("curvature range history") {
  CHECK(kappa_minmax_check({}) == 0.0);
  const auto circle = normalized_history(make_circle(1.0, 128), 1.0, 0.1, 1e-3);
  CHECK(kappa_minmax_check(circle) < 1e-10);
  std::vector<CurveMetrics> synthetic{compute_metrics(make_circle(1.0, 64)),
                                      compute_metrics(make_circle(0.5, 64)),
                                      compute_metrics(make_circle(4.0, 64))};
  CHECK(kappa_minmax_check(synthetic) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("ellipse run keeps its curvature range") {
  const auto h = normalized_history(make_ellipse(2.0, 1.0, 256), 1.0, 0.05);
  CHECK(kappa_minmax_check(h) <= 1e-3);
}

TEST_CASE("L2 deficit") {
  CHECK(l2_deficit(compute_metrics(make_circle(1.0, 512))) < 1e-10);
  const auto e = renormalize(make_ellipse(2.0, 1.0, 256));
  const double d = l2_deficit(compute_metrics(e));
  CHECK(d > 1.0);
  CHECK(l2_deficit(compute_metrics(e.rotated(0.7).translated({3.0, -2.0}))) ==
        doctest::Approx(d).epsilon(1e-12));
  // Deficit of a bound ellipse against its closed-form integral.
  const double s = kTwoPi / polygon_length(make_ellipse(2.0, 1.0, 4096));
  double ref = 0.0;
  const int q = 20000;
  for (int k = 0; k < q; ++k) {
    const double u = (k + 0.5) * kTwoPi / q;
    const double speed = s * std::sqrt(4 * std::sin(u) * std::sin(u) + std::cos(u) * std::cos(u));
    const double kappa = oracle::ellipse_curvature(2.0, 1.0, u) / s;
    ref += (kappa - 1) * (kappa - 1) * speed * kTwoPi / q;
  }
  CHECK(l2_deficit(compute_metrics(renormalize(make_ellipse(2.0, 1.0, 4096)))) ==
        doctest::Approx(ref).epsilon(1e-4));
}

TEST_CASE("log-rate fit") {
  std::vector<double> t, v;
  for (int k = 0; k <= 60; ++k) {
    t.push_back(0.1 * k);
    v.push_back(3.0 * std::exp(-2.0 * t.back()));
  }
  const RateFit r = fit_log_rate(t, v, 1.0, 5.0, 1e-14);
  CHECK(r.slope == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(std::exp(r.intercept) == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(r.points == 41);
  CHECK(deficit_decay_check(t, v).slope == doctest::Approx(-2.0).epsilon(1e-12));
  // Values under the floor leave the fit.
  v[50] = 1e-16;
  CHECK(fit_log_rate(t, v, 1.0, 5.0, 1e-14).points == 40);
  CHECK_THROWS_AS(fit_log_rate(t, v, 1.0, 5.0, 1.0), NoiseFloorError);
  CHECK_THROWS_AS(fit_log_rate(t, std::vector<double>(3, 1.0), 1.0, 5.0, 0.0), ParameterError);
}

TEST_CASE("arc derivatives need a uniform mesh") {
  std::vector<Vec2> p;
  for (int i = 0; i < 64; ++i) {
    const double u = kTwoPi * (i + 0.3 * std::sin(i)) / 64;
    p.push_back({std::cos(u), std::sin(u)});
  }
  const auto m = compute_metrics(DiscreteCurve(p));
  CHECK_THROWS_AS(arc_derivative(m, m.curvature), ParameterError);
  CHECK_THROWS_AS(derivative_norms(m), ParameterError);
  const auto u = compute_metrics(make_circle(1.0, 64));
  CHECK_THROWS_AS(arc_derivative(u, std::vector<double>(10, 0.0)), ParameterError);
}

TEST_CASE("arc derivative of a known profile") {
  const auto c = make_circle(1.0, 512);
  const auto m = compute_metrics(c);
  std::vector<double> v(512);
  for (std::size_t i = 0; i < 512; ++i) v[i] = std::sin(3.0 * m.cumulative_arclength[i] / m.total_length * kTwoPi);
  const auto d = arc_derivative(m, v);
  const double k = 3.0 * kTwoPi / m.total_length;
  for (std::size_t i = 0; i < 512; ++i) {
    CHECK(std::abs(d[i] - k * std::cos(3.0 * m.cumulative_arclength[i] / m.total_length * kTwoPi)) < 1e-3);
  }
}

TEST_CASE("circle derivatives stay at round-off level") {
  const SnapshotObserver obs = [&](double, const DiscreteCurve&, const CurveMetrics& m) {
    CHECK(derivative_norms(m).dkappa_max < 1e-8);
  };
  evolve(FlowState::normalized(make_circle(1.0, 256)), {1e-3, 10, 0.2}, 2.0, std::span(&obs, 1), {0.25});
}

TEST_CASE("derivative estimates are mesh-consistent") {
  const double coarse = derivative_norms(compute_metrics(normalized_at(make_ellipse(2.0, 1.0, 256), 1.0))).dkappa_max;
  const double fine = derivative_norms(compute_metrics(normalized_at(make_ellipse(2.0, 1.0, 512), 1.0))).dkappa_max;
  CHECK(std::abs(coarse / fine - 1.0) < 0.1);
}

TEST_CASE("noise floors scale with the mesh") {
  const NoiseFloors a = derivative_noise_floors(256, kTwoPi);
  const NoiseFloors b = derivative_noise_floors(512, kTwoPi);
  CHECK(b.dkappa / a.dkappa == doctest::Approx(8.0));
  CHECK(b.d2kappa / a.d2kappa == doctest::Approx(16.0));
  CHECK_THROWS_AS(derivative_noise_floors(0, 1.0), ParameterError);
}

TEST_CASE("derivative decay check on synthetic samples") {
  std::vector<DecaySample> s;
  for (int k = 0; k <= 50; ++k) {
    const double t = 0.1 * k;
    s.push_back({t, 0.3 * std::exp(-t), 0.9 * std::exp(-t)});
  }
  const DerivativeDecayResult r = derivative_decay_check(s);
  CHECK(r.passed());
  CHECK(r.dkappa_rate.slope == doctest::Approx(-1.0).epsilon(1e-10));
  // A late bump breaks boundedness.
  s.back().d2kappa_max = 100.0;
  CHECK_FALSE(derivative_decay_check(s).d2kappa_bounded);
  // Flat derivative fails the decay requirement.
  std::vector<DecaySample> flat;
  for (int k = 0; k <= 50; ++k) {
    const double t = 0.1 * k;
    flat.push_back({t, 0.3 / std::max(1.0, std::sqrt(t)), 0.9 / std::max(1.0, t)});
  }
  const auto f = derivative_decay_check(flat);
  CHECK(f.dkappa_bounded);
  CHECK_FALSE(f.dkappa_decays);
  CHECK_THROWS_AS(derivative_decay_check(std::vector<DecaySample>{{3.0, 1.0, 1.0}}), ParameterError);
}

TEST_CASE("interpolation ratio") {
  const double r = gn_ratio(compute_metrics(renormalize(make_ellipse(2.0, 1.0, 512))));
  CHECK(std::isfinite(r));
  CHECK(r > 0.0);
  CHECK(r == doctest::Approx(0.3817738214661269).epsilon(1e-6));
  CHECK_THROWS_AS(gn_ratio(compute_metrics(make_circle(1.0, 512))), NoiseFloorError);
}

TEST_CASE("incircle and circumcircle gap") {
  for (auto [r, c] : {std::pair{1.0, Vec2{}}, std::pair{3.0, Vec2{2.0, -5.0}}, std::pair{0.2, Vec2{0.1, 0.1}}}) {
    const double g = bonnesen_deficit(make_circle(r, 256, c));
    CHECK(g >= 0.0);
    CHECK(g < 1e-8);
  }
  const auto raw = make_ellipse(2.0, 1.0, 512);
  const double s = kTwoPi / polygon_length(raw);
  const double g = bonnesen_deficit(renormalize(raw));
  CHECK(g > 0.5);
  CHECK(g == doctest::Approx(1.0 / (1.0 * s) - 1.0 / (2.0 * s)).epsilon(1e-6));
  CHECK_THROWS_AS(bonnesen_deficit(make_star(1.0, 0.4, 4, 256)), ParameterError);
}

TEST_CASE("convergence metrics") {
  const ConvergenceMetrics c = convergence_metrics(make_circle(1.0, 256));
  CHECK(c.hausdorff_to_unit_circle < 1e-8);
  CHECK(c.center_norm < 1e-10);
  const ConvergenceMetrics off = convergence_metrics(make_circle(1.0, 256, {0.0, 0.3}));
  CHECK(off.center_norm == doctest::Approx(0.3).epsilon(1e-10));
}

TEST_CASE("off-center circle returns to the origin") {
  const auto c = renormalize(make_circle(1.0, 128)).translated({0.1, 0.0});
  const auto end = evolve(FlowState::normalized(c), {1e-3, 10, 0.2}, 3.0, {}).curve;
  const double cn = convergence_metrics(end).center_norm;
  CHECK(cn <= 0.1 * std::exp(-3.0) * 1.1);
  CHECK(cn >= 0.1 * std::exp(-3.0) * 0.9);
}

TEST_CASE("bounds report for the circle") {
  const auto c = renormalize(make_circle(1.0, 256));
  const BoundsReport r = make_bounds_report(c, compute_metrics(c), 0.0, -50.0);
  CHECK(r.thm12_residual == 0.0);
  CHECK(r.l2_deficit < 1e-8);
  CHECK(std::isnan(r.gn_ratio));
  CHECK(r.bonnesen_gap < 1e-8);
  CHECK(r.center_norm < 1e-12);
}

}  // TEST_SUITE
