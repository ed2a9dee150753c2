#include "icf/comparison.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "icf/error.hpp"
#include "icf/kernels.hpp"

namespace icf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
// Above this argument arctan is replaced by its asymptotic expansion.
constexpr double kAtanSwitch = 1e8;
const double kLogAtanSwitch = std::log(kAtanSwitch);

void require_profile_domain(ProfileParams p, double x_max) {
  if (!std::isfinite(p.t)) throw ParameterError("profile time must be finite");
  if (!(p.x >= 0.0 && p.x <= x_max)) {
    throw ParameterError("profile argument x = " + std::to_string(p.x) + " outside [0, " +
                         std::to_string(x_max) + "]");
  }
}

// e^{-t} z without overflow for z = 0.
double scaled_arg(double z, double t) { return z > 0.0 ? std::exp(-t + std::log(z)) : 0.0; }

// 2 e^t arctan(e^{-t} z) for z >= 0.
double profile(double z, double t) {
  if (z <= 0.0) return 0.0;
  if (-t + std::log(z) > kLogAtanSwitch) {
    const double et = std::exp(t);
    const double inv_w = et / z;
    return 2.0 * et * (0.5 * kPi - inv_w + inv_w * inv_w * inv_w / 3.0);
  }
  return 2.0 * std::exp(t) * std::atan(std::exp(-t) * z);
}

// Same as profile() with e^s and e^{-s} hoisted out of a pair loop.
struct ProfileAt {
  double s, es, ems;
  explicit ProfileAt(double s_) : s(s_), es(std::exp(s_)), ems(std::exp(-s_)) {}
  double operator()(double z) const {
    const double w = ems * z;
    if (w > kAtanSwitch || !std::isfinite(w)) return profile(z, s);
    return 2.0 * es * std::atan(w);
  }
};

double lf_unchecked(double x, double t) {
  const double z = std::sin(0.5 * x);
  const double c = std::cos(0.5 * x);
  const double alpha = std::exp(-2.0 * t);
  const double w = scaled_arg(std::abs(z), t);
  const double w2 = w * w;
  double first;
  if (alpha >= 1.0) {
    const double ia = 1.0 / alpha;
    first = 2.0 * z * (ia + 2.0 + w2) / (ia + z * z + 2.0 * c * c);
  } else {
    first = 2.0 * z * (1.0 + 2.0 * alpha + alpha * w2) / (1.0 + w2 + 2.0 * c * c * alpha);
  }
  return first - 2.0 * profile(z, t) + 2.0 * z / (1.0 + w2);
}

double dlf_unchecked(double x, double t) {
  const double z = std::sin(0.5 * x);
  const double c = std::cos(0.5 * x);
  const double alpha = std::exp(-2.0 * t);
  const double w = scaled_arg(std::abs(z), t);
  const double w2 = w * w;
  const double p = 1.0 + w2;
  const double q = 1.0 + 2.0 * alpha - w2;
  return c * (-1.0 / p - 2.0 * w2 / (p * p) + (1.0 + 2.0 * alpha + 3.0 * alpha * w2) / q +
              2.0 * w2 * (1.0 + 2.0 * alpha + alpha * w2) / (q * q));
}

// Pairwise chord lengths and sin(l / 2) for all i < j, row-major.
struct PairTable {
  std::vector<double> chord;
  std::vector<double> half_sin;
  std::size_t n = 0;

  explicit PairTable(const DiscreteCurve& curve) : n(curve.size()) {
    const CurveMetrics m = compute_metrics(curve);
    const auto xs = curve.xs();
    const auto ys = curve.ys();
    const std::size_t pairs = n * (n - 1) / 2;
    chord.resize(pairs);
    half_sin.resize(pairs);
    std::size_t k = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const std::size_t row = n - i - 1;
      kernels::active().chord_row(xs[i], ys[i], xs.data() + i + 1, ys.data() + i + 1, row,
                                  chord.data() + k);
      for (std::size_t j = i + 1; j < n; ++j, ++k) {
        half_sin[k] = std::sin(0.5 * arc_distance(m, i, j));
      }
    }
  }

  bool admissible(double tbar) const {
    const ProfileAt f(-tbar);
    for (std::size_t k = 0; k < chord.size(); ++k) {
      if (chord[k] < f(half_sin[k])) return false;
    }
    return true;
  }
};

void require_normalized_length(const DiscreteCurve& curve) {
  const double length = compute_metrics(curve).total_length;
  if (std::abs(length - kTwoPi) > 1e-8 * kTwoPi) {
    throw ParameterError("curve length " + std::to_string(length) + " is not 2pi");
  }
}

std::size_t node_count(double lo, double hi, double step) {
  return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

}  // namespace

double f_value(ProfileParams p) {
  require_profile_domain(p, kTwoPi);
  return profile(std::sin(0.5 * p.x), p.t);
}

double f_x(ProfileParams p) {
  require_profile_domain(p, kTwoPi);
  const double z = std::sin(0.5 * p.x);
  const double w = scaled_arg(z, p.t);
  return std::cos(0.5 * p.x) / (1.0 + w * w);
}

double f_xx(ProfileParams p) {
  require_profile_domain(p, kTwoPi);
  const double z = std::sin(0.5 * p.x);
  if (z <= 0.0) return 0.0;
  const double c = std::cos(0.5 * p.x);
  const double w = scaled_arg(z, p.t);
  const double w2 = w * w;
  // alpha c^2 z / (1 + w^2)^2 = (c^2 / z) q / (1 + w^2), q = w^2 / (1 + w^2)
  const double q = 1.0 / (1.0 + 1.0 / w2);
  return -0.5 * z / (1.0 + w2) - (c * c / z) * q / (1.0 + w2);
}

double f_t(ProfileParams p) {
  require_profile_domain(p, kTwoPi);
  const double z = std::sin(0.5 * p.x);
  return 2.0 * std::exp(p.t) * g_aux(scaled_arg(z, p.t));
}

double g_aux(double z) {
  if (std::abs(z) < 1e-2) {
    // 2z^3/3 - 4z^5/5 + 6z^7/7 - 8z^9/9
    const double z2 = z * z;
    return z * z2 * (2.0 / 3.0 + z2 * (-4.0 / 5.0 + z2 * (6.0 / 7.0 - z2 * (8.0 / 9.0))));
  }
  return std::atan(z) - z / (1.0 + z * z);
}

double lf_value(ProfileParams p) {
  if (p.x == 0.0) throw SingularityError("Lf is indeterminate at x = 0; its limit is 0");
  require_profile_domain(p, kPi);
  return lf_unchecked(p.x, p.t);
}

double dlf_value(ProfileParams p) {
  require_profile_domain(p, kPi);
  return dlf_unchecked(p.x, p.t);
}

double a_polynomial(double z, double alpha) {
  if (!(z >= 0.0 && z <= 1.0)) throw ParameterError("A-polynomial needs z in [0, 1]");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ParameterError("A-polynomial needs alpha > 0");
  const double a2 = alpha * alpha, a3 = a2 * alpha, a4 = a3 * alpha, a5 = a4 * alpha;
  const double c1 = 2.0 * alpha + 5.0 * a2 + 2.0 * a3;
  const double c2 = 8.0 * a2 + 25.0 * a3 + 16.0 * a4;
  const double c3 = -2.0 * a3 + 3.0 * a4 + 6.0 * a5;
  const double c4 = -a5;
  const double u = z * z;
  return u * (c1 + u * (c2 + u * (c3 + u * c4)));
}

void ProfileGrid::validate() const {
  if (!(x_step > 0.0) || !(t_step > 0.0)) throw ParameterError("grid steps must be positive");
  if (!(x_max >= x_min) || !(t_max >= t_min)) throw ParameterError("grid bounds are inverted");
  if (!std::isfinite(t_min) || !std::isfinite(t_max)) throw ParameterError("grid times must be finite");
}

std::size_t ProfileGrid::x_count() const { return node_count(x_min, x_max, x_step); }
std::size_t ProfileGrid::t_count() const { return node_count(t_min, t_max, t_step); }
double ProfileGrid::x_at(std::size_t k) const {
  return std::min(x_max, x_min + static_cast<double>(k) * x_step);
}
double ProfileGrid::t_at(std::size_t k) const {
  return std::min(t_max, t_min + static_cast<double>(k) * t_step);
}

GridMinimum lf_grid_min(const ProfileGrid& grid) {
  grid.validate();
  if (!(grid.x_min > 0.0) || grid.x_max > kPi) {
    throw ParameterError("Lf grid must lie in (0, pi]");
  }
  GridMinimum best{std::numeric_limits<double>::infinity(), 0.0, 0.0};
  for (std::size_t a = 0; a < grid.x_count(); ++a) {
    const double x = grid.x_at(a);
    for (std::size_t b = 0; b < grid.t_count(); ++b) {
      const double t = grid.t_at(b);
      const double v = lf_unchecked(x, t);
      if (v < best.value) best = {v, x, t};
    }
  }
  return best;
}

DlfCheck dlf_check(const ProfileGrid& grid, double h) {
  grid.validate();
  if (!(grid.x_min > 0.0) || grid.x_max > kPi) {
    throw ParameterError("D(Lf) grid must lie in (0, pi]");
  }
  if (!(h > 0.0) || h >= grid.x_min) throw ParameterError("difference step must lie in (0, x_min)");
  DlfCheck out;
  out.finite_difference.value = std::numeric_limits<double>::infinity();
  out.closed_form.value = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < grid.x_count(); ++a) {
    const double x = grid.x_at(a);
    for (std::size_t b = 0; b < grid.t_count(); ++b) {
      const double t = grid.t_at(b);
      const double fd = (lf_unchecked(x - 2.0 * h, t) - 8.0 * lf_unchecked(x - h, t) +
                         8.0 * lf_unchecked(x + h, t) - lf_unchecked(x + 2.0 * h, t)) /
                        (12.0 * h);
      const double cf = dlf_unchecked(x, t);
      if (fd < out.finite_difference.value) out.finite_difference = {fd, x, t};
      if (cf < out.closed_form.value) out.closed_form = {cf, x, t};
      const double gap = std::abs(fd - cf) / std::max(1.0, std::abs(cf));
      if (gap > out.max_disagreement) {
        out.max_disagreement = gap;
        out.worst_x = x;
        out.worst_t = t;
      }
    }
  }
  return out;
}

PolynomialMinimum a_polynomial_grid_min(const PolynomialGrid& grid) {
  if (!(grid.z_step > 0.0) || !(grid.log10_alpha_step > 0.0)) {
    throw ParameterError("polynomial grid steps must be positive");
  }
  PolynomialMinimum best{std::numeric_limits<double>::infinity(), 0.0, 0.0};
  const std::size_t nz = node_count(0.0, 1.0, grid.z_step);
  const std::size_t na = node_count(grid.log10_alpha_min, grid.log10_alpha_max, grid.log10_alpha_step);
  for (std::size_t a = 0; a < nz; ++a) {
    const double z = std::min(1.0, static_cast<double>(a) * grid.z_step);
    for (std::size_t b = 0; b < na; ++b) {
      const double alpha = std::pow(10.0, grid.log10_alpha_min + static_cast<double>(b) * grid.log10_alpha_step);
      const double v = a_polynomial(z, alpha);
      if (v < best.value) best = {v, z, alpha};
    }
  }
  return best;
}

namespace {
double relative_gap(double approx, double exact) {
  return std::abs(approx - exact) / std::max(1.0, std::abs(exact));
}
}  // namespace

ProfileDerivativeErrors profile_derivative_check(const ProfileGrid& grid, double h) {
  grid.validate();
  if (!(grid.x_min >= 2.0 * h) || grid.x_max > kTwoPi - 2.0 * h) {
    throw ParameterError("derivative grid must keep x +- 2h inside [0, 2pi]");
  }
  ProfileDerivativeErrors e;
  for (std::size_t a = 0; a < grid.x_count(); ++a) {
    const double x = grid.x_at(a);
    for (std::size_t b = 0; b < grid.t_count(); ++b) {
      const double t = grid.t_at(b);
      const double f0 = f_value({x, t});
      const double fxp = f_value({x + h, t}), fxm = f_value({x - h, t});
      const double fxp2 = f_value({x + 2.0 * h, t}), fxm2 = f_value({x - 2.0 * h, t});
      const double ftp = f_value({x, t + h}), ftm = f_value({x, t - h});
      const double ftp2 = f_value({x, t + 2.0 * h}), ftm2 = f_value({x, t - 2.0 * h});
      const double dx = (8.0 * (fxp - fxm) - (fxp2 - fxm2)) / (12.0 * h);
      const double dxx = (16.0 * (fxp + fxm) - (fxp2 + fxm2) - 30.0 * f0) / (12.0 * h * h);
      const double dt = (8.0 * (ftp - ftm) - (ftp2 - ftm2)) / (12.0 * h);
      e.f_x = std::max(e.f_x, relative_gap(dx, f_x({x, t})));
      e.f_xx = std::max(e.f_xx, relative_gap(dxx, f_xx({x, t})));
      e.f_t = std::max(e.f_t, relative_gap(dt, f_t({x, t})));
    }
  }
  return e;
}

bool offset_admissible(const DiscreteCurve& curve, double tbar) {
  return PairTable(curve).admissible(tbar);
}

double compute_tbar(const DiscreteCurve& curve, const OffsetSearch& search) {
  if (!(search.hi > search.lo) || !(search.tolerance > 0.0)) {
    throw ParameterError("invalid offset search interval");
  }
  if (!convexity_check(curve)) throw ParameterError("offset search needs a convex curve");
  require_normalized_length(curve);

  const PairTable pairs(curve);
  if (pairs.admissible(search.lo)) return search.lo;
  if (!pairs.admissible(search.hi)) {
    throw NoAdmissibleOffsetError("no admissible offset up to tbar = " + std::to_string(search.hi));
  }
  double lo = search.lo, hi = search.hi;
  while (hi - lo > search.tolerance) {
    const double mid = 0.5 * (lo + hi);
    (pairs.admissible(mid) ? hi : lo) = mid;
  }
  return hi;
}

ComparisonReport min_Z_scan(const DiscreteCurve& curve, double time, double tbar) {
  require_normalized_length(curve);
  const CurveMetrics m = compute_metrics(curve);
  const std::size_t n = curve.size();
  const auto xs = curve.xs();
  const auto ys = curve.ys();
  const ProfileAt f(time - tbar);

  ComparisonReport r{tbar, std::numeric_limits<double>::infinity(), {0, 0}, time};
  std::vector<double> row(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    kernels::active().chord_row(xs[i], ys[i], xs.data() + i + 1, ys.data() + i + 1, n - i - 1,
                                row.data());
    const double si = m.cumulative_arc[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const double forward = m.cumulative_arc[j] - si;
      const double arc = std::min(forward, m.arc_length - forward);
      const double value = row[j - i - 1] - f(std::sin(0.5 * arc));
      if (value < r.min_Z) {
        r.min_Z = value;
        r.argmin_pair = {i, j};
      }
    }
  }
  return r;
}

}  // namespace icf
