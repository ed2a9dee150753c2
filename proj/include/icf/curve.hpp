#pragma once

// Closed polygonal curves, their discrete geometry, and fixture generators.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "icf/vec2.hpp"

namespace icf {

/// Fewest vertices for which the curvature estimate is meaningful.
inline constexpr std::size_t kMinVertices = 16;

/// Closed polygon, vertex N-1 joined to vertex 0, stored as coordinate arrays.
///
/// Construction enforces the vertex-count minimum and distinct consecutive
/// vertices; orientation and convexity are properties callers query.
class DiscreteCurve {
 public:
  DiscreteCurve(std::vector<double> xs, std::vector<double> ys);
  explicit DiscreteCurve(std::span<const Vec2> points);

  std::size_t size() const noexcept { return xs_.size(); }
  Vec2 vertex(std::size_t i) const noexcept { return {xs_[i], ys_[i]}; }
  std::span<const double> xs() const noexcept { return xs_; }
  std::span<const double> ys() const noexcept { return ys_; }
  std::vector<Vec2> points() const;

  /// Shape-preserving maps; results are validated like any other curve.
  DiscreteCurve scaled(double factor) const;
  DiscreteCurve translated(Vec2 offset) const;
  DiscreteCurve rotated(double angle) const;

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
};

/// Per-vertex and per-edge geometry of a DiscreteCurve.
///
/// Edge i joins vertex i to vertex i+1. Vertex quantities at i use edges i-1
/// and i. Curvature is the reciprocal circumradius of the vertex and its two
/// neighbours, signed positive for left turns, so it is exact on any polygon
/// inscribed in a circle.
struct CurveMetrics {
  std::vector<double> edge_lengths;
  std::vector<double> cumulative_arclength;  // s_0 = 0, s_i = sum of edges before vertex i
  double total_length = 0.0;
  std::vector<double> tangent_angles;  // per edge, unwrapped
  std::vector<double> turning_angles;  // per vertex, in (-pi, pi]
  std::vector<double> curvature;
  std::vector<double> normal_x;  // outward for counterclockwise curves
  std::vector<double> normal_y;
  // Arc length of the smooth curve through the vertices: each edge is replaced
  // by the circular arc whose curvature is the mean of its end vertices.
  // Filled at MetricsLevel::full only.
  std::vector<double> cumulative_arc;
  double arc_length = 0.0;

  std::size_t size() const noexcept { return curvature.size(); }
  double total_turning() const noexcept;
  double min_curvature() const noexcept;
  double max_curvature() const noexcept;
  double min_edge() const noexcept;
  /// Largest |edge - L/N| relative to L/N.
  double nonuniformity() const noexcept;
};

DiscreteCurve make_circle(double radius, std::size_t n, Vec2 center = {});

/// Ellipse (a cos u, b sin u) sampled so that all polygon edges are equal.
DiscreteCurve make_ellipse(double a, double b, std::size_t n);

/// One Fourier mode of a radial perturbation r(u) = R (1 + sum amp cos(mode u + phase)).
struct RadialMode {
  double amplitude = 0.0;
  int mode = 2;
};

/// Circle with radial Fourier perturbation; phases drawn from `seed`.
DiscreteCurve make_perturbed_circle(double radius, std::span<const RadialMode> modes,
                                    std::size_t n, std::uint64_t seed);

/// Petal curve r(u) = (outer + inner)/2 + (outer - inner)/2 cos(petals u) with
/// vertices at equal angles. Deep petals make it non-convex.
DiscreteCurve make_star(double outer, double inner, int petals, std::size_t n);

enum class MetricsLevel {
  full,       // everything
  kinematic,  // edges, lengths, curvature and normals only; angle arrays left empty
};

CurveMetrics compute_metrics(const DiscreteCurve& curve, MetricsLevel level = MetricsLevel::full);

/// n vertices on the polygon with equal consecutive chords, first vertex kept.
/// Starts from equal arc-length spacing and iterates to equal edges.
DiscreteCurve resample_uniform(const DiscreteCurve& curve, std::size_t n);

double chord_distance(const DiscreteCurve& curve, std::size_t i, std::size_t j);

/// Shorter of the two arcs between vertices i and j, measured along the
/// smooth interpolant (see CurveMetrics::cumulative_arc).
double arc_distance(const DiscreteCurve& curve, std::size_t i, std::size_t j);
double arc_distance(const CurveMetrics& metrics, std::size_t i, std::size_t j);

/// Strict left turn at every vertex and total turning of one revolution.
bool convexity_check(const DiscreteCurve& curve);

/// Sum of edge lengths; equals compute_metrics(curve).total_length.
double polygon_length(const DiscreteCurve& curve);

/// Vertex average weighted by the arc length each vertex represents.
Vec2 centroid(const DiscreteCurve& curve);

double enclosed_area(const DiscreteCurve& curve);

/// Symmetric Hausdorff distance between two polygons (vertex to edge).
double hausdorff_distance(const DiscreteCurve& a, const DiscreteCurve& b);

}  // namespace icf
