#pragma once

// Single-element bodies shared by the scalar loops and the vector tails.
// Every vector kernel must mirror these operation sequences exactly.

#include <cmath>

namespace icf::kernels::detail {

inline void edge_op(double ax, double ay, double bx, double by, double& dx, double& dy,
                    double& len) {
  dx = bx - ax;
  dy = by - ay;
  len = std::sqrt(dx * dx + dy * dy);
}

inline void vertex_op(double in_x, double in_y, double in_len, double out_x, double out_y,
                      double out_len, double& kappa, double& nx, double& ny) {
  const double cr = in_x * out_y - in_y * out_x;
  const double sx = in_x + out_x;
  const double sy = in_y + out_y;
  const double chord = std::sqrt(sx * sx + sy * sy);
  kappa = (2.0 * cr) / ((in_len * out_len) * chord);
  const double tx = in_x / in_len + out_x / out_len;
  const double ty = in_y / in_len + out_y / out_len;
  const double tn = std::sqrt(tx * tx + ty * ty);
  nx = ty / tn;
  ny = -tx / tn;
}

inline void advance_op(double& x, double& y, double nx, double ny, double kappa, double dt,
                       double shrink) {
  const double vx = nx / kappa - shrink * x;
  const double vy = ny / kappa - shrink * y;
  x = x + dt * vx;
  y = y + dt * vy;
}

inline double chord_op(double px, double py, double x, double y) {
  const double dx = x - px;
  const double dy = y - py;
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace icf::kernels::detail
