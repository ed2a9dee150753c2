#include "icf/curve.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "icf/error.hpp"
#include "icf/kernels.hpp"

namespace icf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_vertex_count(std::size_t n) {
  if (n < kMinVertices) {
    throw ParameterError("vertex count " + std::to_string(n) + " is below the minimum of " +
                         std::to_string(kMinVertices));
  }
}

double wrap_angle(double a) {
  while (a > std::numbers::pi) a -= kTwoPi;
  while (a <= -std::numbers::pi) a += kTwoPi;
  return a;
}

// Samples a closed parametric curve on u in [0, period) so that consecutive
// vertices are equidistant along the polygon. Fixed-point iteration on the
// parameters starting from `u`; u_0 is kept. Stops at relative spread
// `tolerance` or when an iteration no longer improves it.
DiscreteCurve equal_chord_polygon(const std::function<Vec2(double)>& param, std::vector<double> u,
                                  double period, double tolerance) {
  const std::size_t n = u.size();
  std::vector<Vec2> p(n);
  std::vector<double> s(n + 1), next(n);
  double previous = std::numeric_limits<double>::infinity();
  std::vector<double> best_u = u;
  for (int iter = 0; iter < 200; ++iter) {
    for (std::size_t i = 0; i < n; ++i) p[i] = param(u[i]);
    s[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) s[i + 1] = s[i] + distance(p[i], p[(i + 1) % n]);
    const double total = s[n];
    const double h = total / n;
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(s[i + 1] - s[i] - h));
    if (worst >= previous) break;
    previous = worst;
    best_u = u;
    if (worst <= tolerance * total) break;

    // Invert the piecewise-linear map s(u) at the uniform targets.
    next[0] = u[0];
    std::size_t k = 0;
    for (std::size_t i = 1; i < n; ++i) {
      const double target = h * static_cast<double>(i);
      while (k + 1 < n && s[k + 1] < target) ++k;
      const double u0 = u[k];
      const double u1 = k + 1 < n ? u[k + 1] : u[0] + period;
      const double w = (target - s[k]) / (s[k + 1] - s[k]);
      next[i] = u0 + w * (u1 - u0);
    }
    u.swap(next);
  }
  for (std::size_t i = 0; i < n; ++i) p[i] = param(best_u[i]);
  return DiscreteCurve(p);
}

DiscreteCurve equal_chord_polygon(const std::function<Vec2(double)>& param, std::size_t n) {
  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = kTwoPi * static_cast<double>(i) / n;
  return equal_chord_polygon(param, std::move(u), kTwoPi, 1e-15);
}

}  // namespace

DiscreteCurve::DiscreteCurve(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  if (xs_.size() != ys_.size()) throw ParameterError("coordinate arrays differ in length");
  if (xs_.size() < kMinVertices) {
    throw DegenerateCurveError("curve has " + std::to_string(xs_.size()) +
                               " vertices; at least " + std::to_string(kMinVertices) +
                               " are required");
  }
  const std::size_t n = xs_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (!std::isfinite(xs_[i]) || !std::isfinite(ys_[i])) {
      throw DegenerateCurveError("non-finite vertex " + std::to_string(i));
    }
    if (xs_[i] == xs_[j] && ys_[i] == ys_[j]) {
      throw DegenerateCurveError("vertices " + std::to_string(i) + " and " + std::to_string(j) +
                                 " coincide");
    }
  }
}

DiscreteCurve::DiscreteCurve(std::span<const Vec2> points)
    : DiscreteCurve(
          [&] {
            std::vector<double> v(points.size());
            std::transform(points.begin(), points.end(), v.begin(), [](Vec2 p) { return p.x; });
            return v;
          }(),
          [&] {
            std::vector<double> v(points.size());
            std::transform(points.begin(), points.end(), v.begin(), [](Vec2 p) { return p.y; });
            return v;
          }()) {}

std::vector<Vec2> DiscreteCurve::points() const {
  std::vector<Vec2> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = vertex(i);
  return out;
}

DiscreteCurve DiscreteCurve::scaled(double factor) const {
  std::vector<double> x = xs_, y = ys_;
  kernels::active().scale(x.data(), y.data(), x.size(), factor);
  return DiscreteCurve(std::move(x), std::move(y));
}

DiscreteCurve DiscreteCurve::translated(Vec2 offset) const {
  std::vector<double> x = xs_, y = ys_;
  for (auto& v : x) v += offset.x;
  for (auto& v : y) v += offset.y;
  return DiscreteCurve(std::move(x), std::move(y));
}

DiscreteCurve DiscreteCurve::rotated(double angle) const {
  const double c = std::cos(angle), s = std::sin(angle);
  std::vector<double> x(size()), y(size());
  for (std::size_t i = 0; i < size(); ++i) {
    x[i] = c * xs_[i] - s * ys_[i];
    y[i] = s * xs_[i] + c * ys_[i];
  }
  return DiscreteCurve(std::move(x), std::move(y));
}

double CurveMetrics::total_turning() const noexcept {
  return std::accumulate(turning_angles.begin(), turning_angles.end(), 0.0);
}

double CurveMetrics::min_curvature() const noexcept {
  return *std::min_element(curvature.begin(), curvature.end());
}

double CurveMetrics::max_curvature() const noexcept {
  return *std::max_element(curvature.begin(), curvature.end());
}

double CurveMetrics::min_edge() const noexcept {
  return *std::min_element(edge_lengths.begin(), edge_lengths.end());
}

double CurveMetrics::nonuniformity() const noexcept {
  const double h = total_length / static_cast<double>(edge_lengths.size());
  double worst = 0.0;
  for (double e : edge_lengths) worst = std::max(worst, std::abs(e - h));
  return worst / h;
}

DiscreteCurve make_circle(double radius, std::size_t n, Vec2 center) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw ParameterError("circle radius must be positive");
  require_vertex_count(n);
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
    x[i] = center.x + radius * std::cos(u);
    y[i] = center.y + radius * std::sin(u);
  }
  return DiscreteCurve(std::move(x), std::move(y));
}

DiscreteCurve make_ellipse(double a, double b, std::size_t n) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw ParameterError("ellipse semi-axes must be positive");
  }
  require_vertex_count(n);
  return equal_chord_polygon([a, b](double u) { return Vec2{a * std::cos(u), b * std::sin(u)}; },
                             n);
}

DiscreteCurve make_perturbed_circle(double radius, std::span<const RadialMode> modes,
                                    std::size_t n, std::uint64_t seed) {
  if (!(radius > 0.0)) throw ParameterError("base radius must be positive");
  require_vertex_count(n);
  std::mt19937_64 rng(seed);
  std::vector<double> phases;
  double amplitude_sum = 0.0;
  for (const auto& m : modes) {
    if (m.mode < 1) throw ParameterError("perturbation modes must be >= 1");
    // 53 random bits mapped to [0, 2pi); independent of the standard library's distributions.
    phases.push_back(kTwoPi * static_cast<double>(rng() >> 11) * 0x1.0p-53);
    amplitude_sum += std::abs(m.amplitude);
  }
  if (amplitude_sum >= 1.0) throw ParameterError("perturbation amplitudes must sum below 1");
  std::vector<RadialMode> ms(modes.begin(), modes.end());
  return equal_chord_polygon(
      [radius, ms, phases](double u) {
        double r = 1.0;
        for (std::size_t k = 0; k < ms.size(); ++k) r += ms[k].amplitude * std::cos(ms[k].mode * u + phases[k]);
        r *= radius;
        return Vec2{r * std::cos(u), r * std::sin(u)};
      },
      n);
}

DiscreteCurve make_star(double outer, double inner, int petals, std::size_t n) {
  if (!(outer > 0.0) || !(inner > 0.0) || petals < 2) throw ParameterError("invalid star parameters");
  require_vertex_count(n);
  std::vector<double> x(n), y(n);
  const double mid = 0.5 * (outer + inner), amp = 0.5 * (outer - inner);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
    const double r = mid + amp * std::cos(petals * u);
    x[i] = r * std::cos(u);
    y[i] = r * std::sin(u);
  }
  return DiscreteCurve(std::move(x), std::move(y));
}

CurveMetrics compute_metrics(const DiscreteCurve& curve, MetricsLevel level) {
  const std::size_t n = curve.size();
  const auto xs = curve.xs();
  const auto ys = curve.ys();
  const auto& k = kernels::active();

  std::vector<double> ex(n), ey(n);
  CurveMetrics m;
  m.edge_lengths.resize(n);
  k.edges(xs.data(), ys.data(), xs.data() + 1, ys.data() + 1, n - 1, ex.data(), ey.data(),
          m.edge_lengths.data());
  {
    const double bx = xs[0], by = ys[0];
    k.edges(xs.data() + n - 1, ys.data() + n - 1, &bx, &by, 1, ex.data() + n - 1,
            ey.data() + n - 1, m.edge_lengths.data() + n - 1);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(m.edge_lengths[i] > 0.0)) {
      throw DegenerateCurveError("zero-length edge at vertex " + std::to_string(i));
    }
  }

  m.cumulative_arclength.resize(n);
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    m.cumulative_arclength[i] = s;
    s += m.edge_lengths[i];
  }
  m.total_length = s;

  if (level == MetricsLevel::full) {
    m.tangent_angles.resize(n);
    m.turning_angles.resize(n);
    std::vector<double> direction(n);
    for (std::size_t i = 0; i < n; ++i) direction[i] = std::atan2(ey[i], ex[i]);
    m.tangent_angles[0] = direction[0];
    for (std::size_t i = 1; i < n; ++i) {
      const double turn = wrap_angle(direction[i] - direction[i - 1]);
      m.turning_angles[i] = turn;
      m.tangent_angles[i] = m.tangent_angles[i - 1] + turn;
    }
    m.turning_angles[0] = wrap_angle(direction[0] - direction[n - 1]);
  }

  m.curvature.resize(n);
  m.normal_x.resize(n);
  m.normal_y.resize(n);
  // Vertex i has incoming edge i-1 and outgoing edge i; vertex 0 wraps.
  k.vertices(ex.data(), ey.data(), m.edge_lengths.data(), ex.data() + 1, ey.data() + 1,
             m.edge_lengths.data() + 1, n - 1, m.curvature.data() + 1, m.normal_x.data() + 1,
             m.normal_y.data() + 1);
  k.vertices(ex.data() + n - 1, ey.data() + n - 1, m.edge_lengths.data() + n - 1, ex.data(),
             ey.data(), m.edge_lengths.data(), 1, m.curvature.data(), m.normal_x.data(),
             m.normal_y.data());

  if (level == MetricsLevel::full) {
    m.cumulative_arc.resize(n);
    double arc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      m.cumulative_arc[i] = arc;
      const double c = m.edge_lengths[i];
      const double kappa = 0.5 * std::abs(m.curvature[i] + m.curvature[(i + 1) % n]);
      const double u = 0.5 * kappa * c;
      arc += u > 1e-8 ? 2.0 * std::asin(std::min(u, 1.0)) / kappa : c;
    }
    m.arc_length = arc;
  }
  return m;
}

DiscreteCurve resample_uniform(const DiscreteCurve& curve, std::size_t n) {
  require_vertex_count(n);
  const CurveMetrics m = compute_metrics(curve, MetricsLevel::kinematic);
  const std::size_t src = curve.size();
  // Arc-length parametrization of the input polygon.
  const auto point_at = [&](double sigma) {
    sigma = std::fmod(sigma, m.total_length);
    if (sigma < 0.0) sigma += m.total_length;
    const auto it = std::upper_bound(m.cumulative_arclength.begin(), m.cumulative_arclength.end(), sigma);
    const std::size_t e = static_cast<std::size_t>(it - m.cumulative_arclength.begin()) - 1;
    const double w = std::clamp((sigma - m.cumulative_arclength[e]) / m.edge_lengths[e], 0.0, 1.0);
    const Vec2 a = curve.vertex(e);
    const Vec2 b = curve.vertex((e + 1) % src);
    if (w == 0.0) return a;
    return Vec2{a.x + w * (b.x - a.x), a.y + w * (b.y - a.y)};
  };
  std::vector<double> sigma(n);
  const double h = m.total_length / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) sigma[i] = h * static_cast<double>(i);
  return equal_chord_polygon(point_at, std::move(sigma), m.total_length, 1e-14);
}

double chord_distance(const DiscreteCurve& curve, std::size_t i, std::size_t j) {
  if (i >= curve.size() || j >= curve.size()) throw ParameterError("vertex index out of range");
  return distance(curve.vertex(i), curve.vertex(j));
}

double arc_distance(const CurveMetrics& m, std::size_t i, std::size_t j) {
  if (i >= m.size() || j >= m.size()) throw ParameterError("vertex index out of range");
  if (m.cumulative_arc.size() != m.size()) throw ParameterError("arc lengths need full metrics");
  const double forward = std::abs(m.cumulative_arc[j] - m.cumulative_arc[i]);
  return std::min(forward, m.arc_length - forward);
}

double arc_distance(const DiscreteCurve& curve, std::size_t i, std::size_t j) {
  return arc_distance(compute_metrics(curve), i, j);
}

bool convexity_check(const DiscreteCurve& curve) {
  const std::size_t n = curve.size();
  // With every turn to the left, the winding number is the number of times
  // the edge direction sweeps counterclockwise through angle 0.
  std::size_t windings = 0;
  Vec2 ein = curve.vertex(0) - curve.vertex(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 eout = curve.vertex((i + 1) % n) - curve.vertex(i);
    if (!(cross(ein, eout) > 0.0)) return false;
    if (ein.y < 0.0 && eout.y >= 0.0) ++windings;
    ein = eout;
  }
  return windings == 1;
}

double polygon_length(const DiscreteCurve& curve) {
  const std::size_t n = curve.size();
  const auto xs = curve.xs();
  const auto ys = curve.ys();
  std::vector<double> dx(n), dy(n), len(n);
  const auto& k = kernels::active();
  k.edges(xs.data(), ys.data(), xs.data() + 1, ys.data() + 1, n - 1, dx.data(), dy.data(),
          len.data());
  const double bx = xs[0], by = ys[0];
  k.edges(xs.data() + n - 1, ys.data() + n - 1, &bx, &by, 1, dx.data() + n - 1,
          dy.data() + n - 1, len.data() + n - 1);
  return std::accumulate(len.begin(), len.end(), 0.0);
}

Vec2 centroid(const DiscreteCurve& curve) {
  const CurveMetrics m = compute_metrics(curve);
  const std::size_t n = curve.size();
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = 0.5 * (m.edge_lengths[(i + n - 1) % n] + m.edge_lengths[i]);
    sx += w * curve.xs()[i];
    sy += w * curve.ys()[i];
  }
  return {sx / m.total_length, sy / m.total_length};
}

double enclosed_area(const DiscreteCurve& curve) {
  const std::size_t n = curve.size();
  double a = 0.0;
  for (std::size_t i = 0; i < n; ++i) a += cross(curve.vertex(i), curve.vertex((i + 1) % n));
  return 0.5 * a;
}

double hausdorff_distance(const DiscreteCurve& a, const DiscreteCurve& b) {
  auto one_sided = [](const DiscreteCurve& from, const DiscreteCurve& to) {
    const std::size_t m = to.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < from.size(); ++i) {
      const Vec2 p = from.vertex(i);
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < m; ++j) {
        best = std::min(best, segment_distance(p, to.vertex(j), to.vertex((j + 1) % m)));
      }
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one_sided(a, b), one_sided(b, a));
}

}  // namespace icf
