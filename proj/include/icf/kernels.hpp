#pragma once

// Data-parallel inner loops of the flow and the verifiers. Each kernel has a
// scalar reference and, where the CPU supports it, a vectorized variant that
// performs the identical sequence of IEEE operations (no FMA contraction), so
// all backends produce bitwise-identical output.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace icf::kernels {

enum class Backend { scalar, avx2 };

std::string_view name(Backend b) noexcept;

/// Edge vectors and lengths: d = b - a, len = sqrt(dx^2 + dy^2).
using EdgeFn = void (*)(const double* ax, const double* ay, const double* bx, const double* by,
                        std::size_t n, double* dx, double* dy, double* len);

/// Per-vertex circumcircle curvature and outward normal from the incoming and
/// outgoing edge of each vertex.
using VertexFn = void (*)(const double* in_x, const double* in_y, const double* in_len,
                          const double* out_x, const double* out_y, const double* out_len,
                          std::size_t n, double* kappa, double* nx, double* ny);

/// One explicit Euler step: p += dt * (nu / kappa - shrink * p).
using AdvanceFn = void (*)(double* x, double* y, const double* nx, const double* ny,
                           const double* kappa, std::size_t n, double dt, double shrink);

/// Distances from (px, py) to every point of a range.
using ChordRowFn = void (*)(double px, double py, const double* x, const double* y,
                            std::size_t n, double* out);

/// x *= s, y *= s.
using ScaleFn = void (*)(double* x, double* y, std::size_t n, double s);

struct Table {
  Backend backend;
  EdgeFn edges;
  VertexFn vertices;
  AdvanceFn advance;
  ChordRowFn chord_row;
  ScaleFn scale;
};

/// Kernel table for a backend; throws ParameterError if it is not available
/// on this CPU or was not compiled in.
const Table& table(Backend b);

/// Backends usable on the running CPU, scalar first.
std::vector<Backend> available();

/// The fastest available backend, detected once.
const Table& active();

}  // namespace icf::kernels
