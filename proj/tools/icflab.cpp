// icflab: command-line runner for inverse curvature flow experiments.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "icf/comparison.hpp"
#include "icf/error.hpp"
#include "icf/experiment.hpp"
#include "icf/flow.hpp"

namespace {

struct Overrides {
  std::string config;
  std::optional<std::string> shape;
  std::optional<double> a, b;
  std::optional<std::size_t> n;
  std::optional<double> dt, t_end, snapshot_interval;
  std::optional<std::string> mode, out, svg_dir;
  std::optional<std::uint64_t> seed;
};

void add_config_flags(CLI::App* cmd, Overrides& o, bool run_flags) {
  cmd->add_option("--config", o.config, "JSON experiment config");
  cmd->add_option("--shape", o.shape, "circle | ellipse | perturbed_circle | star | polygon");
  cmd->add_option("--a", o.a, "ellipse semi-axis along x");
  cmd->add_option("--b", o.b, "ellipse semi-axis along y");
  cmd->add_option("--n", o.n, "vertex count");
  cmd->add_option("--seed", o.seed, "seed for perturbed_circle phases");
  if (!run_flags) return;
  cmd->add_option("--dt", o.dt, "maximum time step");
  cmd->add_option("--t-end", o.t_end, "final time");
  cmd->add_option("--mode", o.mode, "normalized | unnormalized | both");
  cmd->add_option("--snapshot-interval", o.snapshot_interval, "time between snapshots");
  cmd->add_option("--out", o.out, "output directory");
  cmd->add_option("--svg-dir", o.svg_dir, "directory for SVG snapshots");
}

icf::ExperimentConfig load_config(const Overrides& o) {
  icf::ExperimentConfig c;
  if (!o.config.empty()) {
    std::ifstream in(o.config, std::ios::binary);
    if (!in) throw icf::ParameterError("cannot read config file '" + o.config + "'");
    std::ostringstream text;
    text << in.rdbuf();
    c = icf::parse_config(text.str());
  }
  // Flags override file values; reuse the JSON parser for enum spellings.
  if (o.shape) c.shape = icf::parse_config("{\"shape\":\"" + *o.shape + "\"}").shape;
  if (o.mode) c.mode = icf::parse_config("{\"mode\":\"" + *o.mode + "\"}").mode;
  if (o.a) c.a = *o.a;
  if (o.b) c.b = *o.b;
  if (o.n) c.n = *o.n;
  if (o.seed) c.seed = *o.seed;
  if (o.dt) c.dt = *o.dt;
  if (o.t_end) c.t_end = *o.t_end;
  if (o.snapshot_interval) c.snapshot_interval = *o.snapshot_interval;
  if (o.out) c.out = *o.out;
  if (o.svg_dir) c.svg_dir = *o.svg_dir;
  c.validate();
  return c;
}

int cmd_run(const Overrides& o) {
  const icf::ExperimentConfig cfg = load_config(o);
  const icf::RunResult r = icf::run_experiment(cfg);
  for (const auto& c : r.checks) {
    std::printf("%-5s %-17s worst=%s tol=%s %s\n", c.passed ? "pass" : "FAIL", c.name.c_str(),
                icf::format_double(c.worst).c_str(), icf::format_double(c.tolerance).c_str(),
                c.detail.c_str());
  }
  if (r.failure_time) {
    std::fprintf(stderr, "flow error at t = %s: %s\n", icf::format_double(*r.failure_time).c_str(),
                 r.failure.c_str());
  }
  std::printf("tbar = %s\nresults in %s\n", icf::format_double(r.tbar).c_str(),
              cfg.out.string().c_str());
  return r.exit_code;
}

int cmd_tbar(const Overrides& o) {
  const icf::ExperimentConfig cfg = load_config(o);
  const icf::DiscreteCurve curve = icf::build_initial_curve(cfg);
  if (!icf::convexity_check(curve)) {
    std::fprintf(stderr, "error: initial curve is not strictly convex\n");
    return icf::kExitFlowError;
  }
  std::printf("%s\n", icf::format_double(icf::compute_tbar(icf::renormalize(curve))).c_str());
  return icf::kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverse curvature flow of convex plane curves"};
  app.require_subcommand(1);

  Overrides run_o, tbar_o;
  auto* run = app.add_subcommand("run", "run a flow experiment and its checks");
  add_config_flags(run, run_o, true);
  auto* tbar = app.add_subcommand("tbar", "print the comparison offset for a shape");
  add_config_flags(tbar, tbar_o, false);

  icf::ProfileGrid grid;
  icf::PolynomialGrid poly;
  auto* vp = app.add_subcommand("verify-profile", "grid certificates for the comparison profile");
  vp->add_option("--x-min", grid.x_min);
  vp->add_option("--x-max", grid.x_max);
  vp->add_option("--x-step", grid.x_step);
  vp->add_option("--t-min", grid.t_min);
  vp->add_option("--t-max", grid.t_max);
  vp->add_option("--t-step", grid.t_step);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : icf::kExitUsage;
  }

  try {
    if (*run) return cmd_run(run_o);
    if (*tbar) return cmd_tbar(tbar_o);
    const icf::ProfileVerification v = icf::verify_profile(grid, poly, std::cout);
    return v.passed ? icf::kExitPass : icf::kExitCheckFailure;
  } catch (const icf::ParameterError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return icf::kExitUsage;
  } catch (const icf::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return icf::kExitFlowError;
  }
}
