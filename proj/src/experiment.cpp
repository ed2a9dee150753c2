#include "icf/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "icf/error.hpp"
#include "icf/flow.hpp"

namespace icf {

namespace {

using nlohmann::json;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const std::vector<std::string> kNormalizedChecks = {
    "comparison", "curvature_bound", "kappa_range",      "l2_bound",  "l2_decay",
    "bonnesen_decay", "derivative_decay", "gn_ratio", "convergence"};

const std::map<std::string, double> kDefaultTolerances = {
    {"comparison", 5e-3},        // allowed negative excursion of min Z
    {"curvature_bound", 1e-2},   // kappa^2 above 1 + 2 e^{-2(t - tbar)}
    {"kappa_range", 1e-3},       // curvature outside its initial range
    {"l2_bound", 1e-3},          // deficit above 2 e^{-2(t - tbar)}
    {"l2_decay", -1.8},          // largest admissible log-slope
    {"bonnesen_decay", -0.8},    // largest admissible log-slope
    {"derivative_decay", -0.3},  // largest admissible log-slope of max |D kappa|
    {"gn_ratio", 10.0},          // growth factor over the t = 0.5 baseline
    {"convergence", 0.02},       // final max |kappa - 1| and distance to the unit circle
    {"length_law", 1e-2},        // relative deviation from L(0) e^t
    {"cross_check", 5e-3},       // Hausdorff distance between formulations
};

// Fits exclude values below this floor.
constexpr double kGapFloor = 1e-12;

std::string shape_name(Shape s) {
  switch (s) {
    case Shape::circle: return "circle";
    case Shape::ellipse: return "ellipse";
    case Shape::perturbed_circle: return "perturbed_circle";
    case Shape::star: return "star";
    case Shape::polygon: return "polygon";
  }
  return "unknown";
}

std::string mode_name(RunMode m) {
  switch (m) {
    case RunMode::normalized: return "normalized";
    case RunMode::unnormalized: return "unnormalized";
    case RunMode::both: return "both";
  }
  return "unknown";
}

Shape parse_shape(const std::string& s) {
  for (Shape v : {Shape::circle, Shape::ellipse, Shape::perturbed_circle, Shape::star, Shape::polygon}) {
    if (shape_name(v) == s) return v;
  }
  throw ParameterError("unknown shape '" + s + "'");
}

RunMode parse_mode(const std::string& s) {
  for (RunMode v : {RunMode::normalized, RunMode::unnormalized, RunMode::both}) {
    if (mode_name(v) == s) return v;
  }
  throw ParameterError("unknown mode '" + s + "'");
}

// L2 deficit of the regular n-gon of length 2pi: its circumradius exceeds 1,
// so the deficit of a resolved circle never falls below this value.
double polygon_deficit_floor(std::size_t n) {
  const double h = std::numbers::pi / static_cast<double>(n);
  const double kappa = std::sin(h) / h;
  return kTwoPi * (1.0 - kappa) * (1.0 - kappa);
}

std::string svg_for(const DiscreteCurve& curve, double time) {
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-2 -2 4 4\" width=\"400\" height=\"400\">\n";
  s << "<!-- t = " << format_double(time) << " -->\n";
  s << "<g transform=\"scale(1,-1)\">\n";
  s << "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#999\" stroke-width=\"0.005\" "
       "stroke-dasharray=\"0.02 0.02\"/>\n";
  s << "<path fill=\"none\" stroke=\"#c33\" stroke-width=\"0.01\" d=\"";
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const Vec2 p = curve.vertex(i);
    s << (i == 0 ? "M" : " L") << format_double(p.x) << ' ' << format_double(p.y);
  }
  s << " Z\"/>\n</g>\n</svg>\n";
  return s.str();
}

std::string json_number(double v) { return std::isfinite(v) ? format_double(v) : "null"; }

struct Snapshot {
  double time;
  double length;
  DiscreteCurve normalized;
  CurveMetrics metrics;
};

// Evaluates every requested check on the collected snapshots.
class CheckEvaluator {
 public:
  CheckEvaluator(const ExperimentConfig& cfg, const RunResult& run,
                 const std::vector<CurveMetrics>& history)
      : cfg_(cfg), run_(run), history_(history) {}

  CheckResult evaluate(const std::string& name) const {
    CheckResult r{name, false, 0.0, tolerance(name), {}};
    if (run_.reports.empty()) {
      r.worst = std::numeric_limits<double>::quiet_NaN();
      r.detail = "no snapshots";
      return r;
    }
    if (name == "comparison") {
      const double lowest = *std::min_element(run_.min_z.begin(), run_.min_z.end());
      r.worst = std::max(0.0, -lowest);
      r.passed = r.worst <= r.tolerance;
      r.detail = "min Z = " + format_double(lowest);
    } else if (name == "curvature_bound") {
      for (const auto& b : run_.reports) r.worst = std::max(r.worst, b.thm12_residual);
      r.passed = r.worst <= r.tolerance;
    } else if (name == "kappa_range") {
      r.worst = kappa_minmax_check(history_);
      r.passed = r.worst <= r.tolerance;
    } else if (name == "l2_bound") {
      for (const auto& b : run_.reports) {
        r.worst = std::max(r.worst, b.l2_deficit - 2.0 * std::exp(-2.0 * (b.time - run_.tbar)));
      }
      r.passed = r.worst <= r.tolerance;
    } else if (name == "l2_decay") {
      std::vector<double> t, v;
      for (const auto& b : run_.reports) {
        t.push_back(b.time);
        v.push_back(b.l2_deficit);
      }
      const double floor = std::max(1e-14, 4.0 * polygon_deficit_floor(cfg_.n));
      rate_check(r, t, v, 1.0, 5.0, floor);
    } else if (name == "bonnesen_decay") {
      std::vector<double> t, v;
      for (const auto& b : run_.reports) {
        t.push_back(b.time);
        v.push_back(b.bonnesen_gap);
      }
      rate_check(r, t, v, 1.0, 4.0, kGapFloor);
    } else if (name == "derivative_decay") {
      std::vector<DecaySample> samples;
      for (const auto& b : run_.reports) samples.push_back({b.time, b.dkappa_max, b.d2kappa_max});
      DecayWindows w;
      w.max_slope = r.tolerance;
      w.floors = derivative_noise_floors(cfg_.n, kTwoPi);
      try {
        const DerivativeDecayResult d = derivative_decay_check(samples, w);
        r.passed = d.passed();
        r.worst = d.dkappa_rate.points >= 2 ? d.dkappa_rate.slope : 0.0;
        r.detail = "Dk worst/const = " + format_double(d.dkappa_worst) + "/" +
                   format_double(d.dkappa_constant) + ", D2k worst/const = " +
                   format_double(d.d2kappa_worst) + "/" + format_double(d.d2kappa_constant);
      } catch (const ParameterError& e) {
        r.worst = std::numeric_limits<double>::quiet_NaN();
        r.detail = e.what();
      }
    } else if (name == "gn_ratio") {
      double baseline = std::numeric_limits<double>::quiet_NaN();
      double sup = 0.0;
      for (const auto& b : run_.reports) {
        if (b.time < 0.5 || b.time > 4.0 || !std::isfinite(b.gn_ratio)) continue;
        if (!std::isfinite(baseline)) baseline = b.gn_ratio;
        sup = std::max(sup, b.gn_ratio);
      }
      if (!std::isfinite(baseline)) {
        r.passed = true;
        r.detail = "below noise floor throughout";
      } else {
        r.worst = sup / baseline;
        r.passed = r.worst <= r.tolerance;
        r.detail = "baseline " + format_double(baseline);
      }
    } else if (name == "convergence") {
      const BoundsReport& last = run_.reports.back();
      const double kdev = std::max(std::abs(last.kappa_max - 1.0), std::abs(last.kappa_min - 1.0));
      r.worst = std::max(kdev, last.hausdorff_to_unit_circle);
      r.passed = r.worst <= r.tolerance;
      r.detail = "t = " + format_double(last.time);
    } else if (name == "length_law") {
      std::vector<std::pair<double, double>> h;
      for (std::size_t k = 0; k < run_.reports.size(); ++k) {
        h.emplace_back(run_.reports[k].time, run_.lengths[k]);
      }
      r.worst = length_law_residual(h);
      r.passed = r.worst <= r.tolerance;
    } else {
      throw ParameterError("unknown check '" + name + "'");
    }
    return r;
  }

  double tolerance(const std::string& name) const {
    const auto it = cfg_.tolerances.find(name);
    return it != cfg_.tolerances.end() ? it->second : default_tolerance(name);
  }

 private:
  static void rate_check(CheckResult& r, const std::vector<double>& t, const std::vector<double>& v,
                         double lo, double hi, double floor) {
    try {
      const RateFit fit = fit_log_rate(t, v, lo, hi, floor);
      r.worst = fit.slope;
      r.passed = fit.slope <= r.tolerance;
      r.detail = std::to_string(fit.points) + " points in [" + format_double(lo) + ", " +
                 format_double(hi) + "]";
    } catch (const NoiseFloorError&) {
      r.passed = true;
      r.worst = 0.0;
      r.detail = "below noise floor " + format_double(floor) + " throughout the window";
    }
  }

  const ExperimentConfig& cfg_;
  const RunResult& run_;
  const std::vector<CurveMetrics>& history_;
};

void write_outputs(const ExperimentConfig& cfg, const RunResult& r) {
  std::filesystem::create_directories(cfg.out);
  {
    std::ofstream csv(cfg.out / "timeseries.csv", std::ios::binary);
    csv << csv_header() << '\n';
    for (std::size_t k = 0; k < r.reports.size(); ++k) {
      const BoundsReport& b = r.reports[k];
      const double cols[] = {b.time,        r.lengths[k],       b.kappa_min,     b.kappa_max,
                             r.min_z[k],    r.tbar,             b.thm12_residual, b.l2_deficit,
                             b.dkappa_max,  b.d2kappa_max,      b.gn_ratio,      b.bonnesen_gap,
                             b.hausdorff_to_unit_circle,        b.center_norm};
      for (std::size_t c = 0; c < std::size(cols); ++c) csv << (c ? "," : "") << format_double(cols[c]);
      csv << '\n';
    }
  }
  std::ofstream js(cfg.out / "summary.json", std::ios::binary);
  js << "{\n";
  js << "  \"status\": \"" << (r.exit_code == kExitPass ? "pass" : "fail") << "\",\n";
  js << "  \"exit_code\": " << r.exit_code << ",\n";
  js << "  \"shape\": " << json(shape_name(cfg.shape)).dump() << ",\n";
  js << "  \"mode\": " << json(mode_name(cfg.mode)).dump() << ",\n";
  js << "  \"n\": " << cfg.n << ",\n";
  js << "  \"dt\": " << json_number(cfg.dt) << ",\n";
  js << "  \"t_end\": " << json_number(cfg.t_end) << ",\n";
  js << "  \"seed\": " << cfg.seed << ",\n";
  js << "  \"tbar\": " << json_number(r.tbar) << ",\n";
  js << "  \"snapshots\": " << r.reports.size() << ",\n";
  if (r.failure_time) {
    js << "  \"failure\": {\"time\": " << json_number(*r.failure_time)
       << ", \"message\": " << json(r.failure).dump() << "},\n";
  } else {
    js << "  \"failure\": null,\n";
  }
  js << "  \"checks\": {";
  for (std::size_t k = 0; k < r.checks.size(); ++k) {
    const CheckResult& c = r.checks[k];
    js << (k ? ",\n" : "\n") << "    " << json(c.name).dump() << ": {\"status\": \""
       << (c.passed ? "pass" : "fail") << "\", \"worst\": " << json_number(c.worst)
       << ", \"tolerance\": " << json_number(c.tolerance) << ", \"detail\": " << json(c.detail).dump()
       << "}";
  }
  js << "\n  }\n}\n";
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string_view csv_header() {
  return "t,length,kappa_min,kappa_max,min_Z,tbar,thm12_residual,l2_deficit,dkappa_max,"
         "d2kappa_max,gn_ratio,bonnesen_gap,hausdorff,center_norm";
}

std::vector<std::string> default_checks(RunMode mode) {
  std::vector<std::string> out = kNormalizedChecks;
  if (mode == RunMode::unnormalized) out.push_back("length_law");
  if (mode == RunMode::both) out.push_back("cross_check");
  return out;
}

double default_tolerance(const std::string& check) {
  const auto it = kDefaultTolerances.find(check);
  if (it == kDefaultTolerances.end()) throw ParameterError("unknown check '" + check + "'");
  return it->second;
}

void ExperimentConfig::validate() const {
  auto positive = [](double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ParameterError(std::string(what) + " must be positive");
  };
  positive(dt, "dt");
  positive(t_end, "t_end");
  positive(snapshot_interval, "snapshot_interval");
  positive(safety, "safety");
  if (safety > 1.0) throw ParameterError("safety must not exceed 1");
  if (resample_every < 1) throw ParameterError("resample_every must be at least 1");
  if (n < kMinVertices) throw ParameterError("n must be at least " + std::to_string(kMinVertices));
  switch (shape) {
    case Shape::circle: positive(radius, "radius"); break;
    case Shape::ellipse: positive(a, "a"); positive(b, "b"); break;
    case Shape::perturbed_circle:
      positive(radius, "radius");
      for (const auto& m : perturbation) {
        if (m.mode < 1) throw ParameterError("perturbation modes must be >= 1");
      }
      break;
    case Shape::star: positive(star_outer, "star_outer"); positive(star_inner, "star_inner"); break;
    case Shape::polygon:
      if (vertices.size() < kMinVertices) throw ParameterError("polygon needs at least 16 vertices");
      break;
  }
  for (const auto& c : checks) {
    default_tolerance(c);
    if (c == "length_law" && mode != RunMode::unnormalized) {
      throw ParameterError("length_law applies to unnormalized runs only");
    }
    if (c == "cross_check" && mode != RunMode::both) {
      throw ParameterError("cross_check applies to mode 'both' only");
    }
  }
  for (const auto& [name, value] : tolerances) {
    default_tolerance(name);
    if (!std::isfinite(value)) throw ParameterError("tolerance for " + name + " must be finite");
  }
}

ExperimentConfig parse_config(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParameterError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParameterError("config must be a JSON object");
  static const std::set<std::string> known = {
      "shape", "radius", "center", "a", "b", "perturbation", "star_outer", "star_inner",
      "star_petals", "vertices", "n", "dt", "t_end", "mode", "snapshot_interval",
      "resample_every", "safety", "checks", "tolerances", "seed", "out", "svg_dir"};
  for (const auto& [key, _] : j.items()) {
    if (!known.contains(key)) throw ParameterError("unknown config key '" + key + "'");
  }

  ExperimentConfig c;
  try {
    if (j.contains("shape")) c.shape = parse_shape(j["shape"].get<std::string>());
    if (j.contains("radius")) c.radius = j["radius"].get<double>();
    if (j.contains("center")) {
      const auto v = j["center"].get<std::vector<double>>();
      if (v.size() != 2) throw ParameterError("center must have two coordinates");
      c.center = {v[0], v[1]};
    }
    if (j.contains("a")) c.a = j["a"].get<double>();
    if (j.contains("b")) c.b = j["b"].get<double>();
    if (j.contains("perturbation")) {
      for (const auto& m : j["perturbation"]) {
        c.perturbation.push_back({m.at("amplitude").get<double>(), m.at("mode").get<int>()});
      }
    }
    if (j.contains("star_outer")) c.star_outer = j["star_outer"].get<double>();
    if (j.contains("star_inner")) c.star_inner = j["star_inner"].get<double>();
    if (j.contains("star_petals")) c.star_petals = j["star_petals"].get<int>();
    if (j.contains("vertices")) {
      for (const auto& p : j["vertices"]) {
        const auto v = p.get<std::vector<double>>();
        if (v.size() != 2) throw ParameterError("each vertex needs two coordinates");
        c.vertices.push_back({v[0], v[1]});
      }
    }
    if (j.contains("n")) {
      const auto n = j["n"].get<long long>();
      if (n < 0) throw ParameterError("n must be positive");
      c.n = static_cast<std::size_t>(n);
    }
    if (j.contains("dt")) c.dt = j["dt"].get<double>();
    if (j.contains("t_end")) c.t_end = j["t_end"].get<double>();
    if (j.contains("mode")) c.mode = parse_mode(j["mode"].get<std::string>());
    if (j.contains("snapshot_interval")) c.snapshot_interval = j["snapshot_interval"].get<double>();
    if (j.contains("resample_every")) c.resample_every = j["resample_every"].get<int>();
    if (j.contains("safety")) c.safety = j["safety"].get<double>();
    if (j.contains("checks")) c.checks = j["checks"].get<std::vector<std::string>>();
    if (j.contains("tolerances")) c.tolerances = j["tolerances"].get<std::map<std::string, double>>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("out")) c.out = j["out"].get<std::string>();
    if (j.contains("svg_dir")) c.svg_dir = j["svg_dir"].get<std::string>();
  } catch (const json::exception& e) {
    throw ParameterError(std::string("config field has the wrong type: ") + e.what());
  }
  return c;
}

DiscreteCurve build_initial_curve(const ExperimentConfig& c) {
  switch (c.shape) {
    case Shape::circle: return make_circle(c.radius, c.n, c.center);
    case Shape::ellipse: return make_ellipse(c.a, c.b, c.n);
    case Shape::perturbed_circle:
      return make_perturbed_circle(c.radius, c.perturbation, c.n, c.seed).translated(c.center);
    case Shape::star: return make_star(c.star_outer, c.star_inner, c.star_petals, c.n);
    case Shape::polygon: return DiscreteCurve(c.vertices);
  }
  throw ParameterError("unknown shape");
}

RunResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::vector<std::string> checks = cfg.checks.empty() ? default_checks(cfg.mode) : cfg.checks;

  RunResult r;
  std::vector<CurveMetrics> history;
  auto finish = [&](bool aborted) {
    const CheckEvaluator eval(cfg, r, history);
    for (const auto& name : checks) {
      CheckResult c;
      if (name == "cross_check") {
        c = {name, false, std::numeric_limits<double>::quiet_NaN(), eval.tolerance(name), "not run"};
      } else {
        c = eval.evaluate(name);
      }
      if (aborted) {
        c.passed = false;
        c.detail = "run aborted: " + c.detail;
      }
      r.checks.push_back(c);
    }
  };

  const DiscreteCurve initial = build_initial_curve(cfg);
  if (!convexity_check(initial)) {
    r.exit_code = kExitFlowError;
    r.failure_time = 0.0;
    r.failure = "initial curve is not strictly convex";
    r.tbar = std::numeric_limits<double>::quiet_NaN();
    finish(true);
    write_outputs(cfg, r);
    return r;
  }

  const StepControl control{cfg.dt, cfg.resample_every, cfg.safety};
  const FlowMode flow_mode =
      cfg.mode == RunMode::unnormalized ? FlowMode::unnormalized : FlowMode::normalized;
  FlowState state = flow_mode == FlowMode::unnormalized ? FlowState::unnormalized(initial)
                                                        : FlowState::normalized(initial);
  r.tbar = compute_tbar(renormalize(initial));
  state.tbar = r.tbar;

  std::size_t snapshot_index = 0;
  const SnapshotObserver observer = [&](double t, const DiscreteCurve& curve,
                                        const CurveMetrics& m) {
    const bool rescale = flow_mode == FlowMode::unnormalized;
    const DiscreteCurve normalized = rescale ? curve.scaled(kTwoPi / m.total_length) : curve;
    const CurveMetrics nm = rescale ? compute_metrics(normalized) : m;
    r.lengths.push_back(m.total_length);
    r.reports.push_back(make_bounds_report(normalized, nm, t, r.tbar));
    r.min_z.push_back(min_Z_scan(normalized, t, r.tbar).min_Z);
    history.push_back(nm);
    if (cfg.svg_dir) {
      std::filesystem::create_directories(*cfg.svg_dir);
      char name[32];
      std::snprintf(name, sizeof name, "snapshot_%05zu.svg", snapshot_index);
      std::ofstream(*cfg.svg_dir / name, std::ios::binary) << svg_for(normalized, t);
    }
    ++snapshot_index;
  };

  try {
    evolve(std::move(state), control, cfg.t_end, std::span(&observer, 1), {cfg.snapshot_interval});
  } catch (const FlowError& e) {
    r.exit_code = kExitFlowError;
    r.failure_time = e.time();
    r.failure = e.what();
    finish(true);
    write_outputs(cfg, r);
    return r;
  }

  finish(false);
  if (std::find(checks.begin(), checks.end(), "cross_check") != checks.end()) {
    auto it = std::find_if(r.checks.begin(), r.checks.end(),
                           [](const CheckResult& c) { return c.name == "cross_check"; });
    try {
      const CrossCheckResult x =
          cross_check_formulations(initial, control, cfg.t_end, cfg.snapshot_interval);
      it->worst = x.max_distance;
      it->passed = x.max_distance <= it->tolerance;
      it->detail = std::to_string(x.distances.size()) + " snapshot pairs";
    } catch (const FlowError& e) {
      r.exit_code = kExitFlowError;
      r.failure_time = e.time();
      r.failure = std::string("cross-check: ") + e.what();
      it->detail = "run aborted";
    }
  }
  if (r.exit_code == kExitPass) {
    const bool all = std::all_of(r.checks.begin(), r.checks.end(),
                                 [](const CheckResult& c) { return c.passed; });
    r.exit_code = all ? kExitPass : kExitCheckFailure;
  }
  write_outputs(cfg, r);
  return r;
}

ProfileVerification verify_profile(const ProfileGrid& grid, const PolynomialGrid& poly,
                                   std::ostream& out) {
  ProfileVerification v;
  v.lf = lf_grid_min(grid);
  v.dlf = dlf_check(grid);
  v.a = a_polynomial_grid_min(poly);
  ProfileGrid dgrid = grid;
  dgrid.x_min = std::max(grid.x_min, 1e-3);
  v.derivatives = profile_derivative_check(dgrid);
  for (double t : {-3.0, 0.0, 3.0}) v.lf_near_zero.push_back(lf_value({1e-6, t}));

  constexpr double kFloor = -1e-8;
  const double near_zero =
      std::abs(*std::max_element(v.lf_near_zero.begin(), v.lf_near_zero.end(),
                                 [](double a, double b) { return std::abs(a) < std::abs(b); }));
  const double deriv_err = std::max({v.derivatives.f_x, v.derivatives.f_xx, v.derivatives.f_t});
  v.passed = v.lf.value >= kFloor && v.dlf.finite_difference.value >= kFloor &&
             v.dlf.closed_form.value >= kFloor && v.a.value >= kFloor && near_zero < 1e-5 &&
             v.dlf.max_disagreement <= 1e-6 && deriv_err <= 1e-6;

  auto line = [&](const char* what, double value, const std::string& where, bool ok) {
    out << (ok ? "ok    " : "FAIL  ") << what << " = " << format_double(value) << where << '\n';
  };
  auto at = [](double x, double t) {
    return "  at x = " + format_double(x) + ", t = " + format_double(t);
  };
  line("min Lf", v.lf.value, at(v.lf.x, v.lf.t), v.lf.value >= kFloor);
  line("min D(Lf) finite difference", v.dlf.finite_difference.value,
       at(v.dlf.finite_difference.x, v.dlf.finite_difference.t), v.dlf.finite_difference.value >= kFloor);
  line("min D(Lf) closed form", v.dlf.closed_form.value,
       at(v.dlf.closed_form.x, v.dlf.closed_form.t), v.dlf.closed_form.value >= kFloor);
  line("max D(Lf) disagreement", v.dlf.max_disagreement, at(v.dlf.worst_x, v.dlf.worst_t),
       v.dlf.max_disagreement <= 1e-6);
  line("min A", v.a.value,
       "  at z = " + format_double(v.a.z) + ", alpha = " + format_double(v.a.alpha), v.a.value >= kFloor);
  line("max |Lf(1e-6, t)|, t in {-3, 0, 3}", near_zero, "", near_zero < 1e-5);
  line("max profile derivative error", deriv_err, "", deriv_err <= 1e-6);
  out << (v.passed ? "PASS" : "FAIL") << '\n';
  return v;
}

}  // namespace icf
