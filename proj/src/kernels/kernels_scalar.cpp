#include "kernels_impl.hpp"

#include "kernel_ops.hpp"

namespace icf::kernels::scalar {

void edges(const double* ax, const double* ay, const double* bx, const double* by,
           std::size_t n, double* dx, double* dy, double* len) {
  for (std::size_t i = 0; i < n; ++i) {
    detail::edge_op(ax[i], ay[i], bx[i], by[i], dx[i], dy[i], len[i]);
  }
}

void vertices(const double* in_x, const double* in_y, const double* in_len,
              const double* out_x, const double* out_y, const double* out_len, std::size_t n,
              double* kappa, double* nx, double* ny) {
  for (std::size_t i = 0; i < n; ++i) {
    detail::vertex_op(in_x[i], in_y[i], in_len[i], out_x[i], out_y[i], out_len[i], kappa[i],
                      nx[i], ny[i]);
  }
}

void advance(double* x, double* y, const double* nx, const double* ny, const double* kappa,
             std::size_t n, double dt, double shrink) {
  for (std::size_t i = 0; i < n; ++i) {
    detail::advance_op(x[i], y[i], nx[i], ny[i], kappa[i], dt, shrink);
  }
}

void chord_row(double px, double py, const double* x, const double* y, std::size_t n,
               double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = detail::chord_op(px, py, x[i], y[i]);
}

void scale(double* x, double* y, std::size_t n, double s) {
  for (std::size_t i = 0; i < n; ++i) {
    x[i] *= s;
    y[i] *= s;
  }
}

}  // namespace icf::kernels::scalar
