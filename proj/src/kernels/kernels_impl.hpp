#pragma once

#include <cstddef>

namespace icf::kernels {

#define ICF_DECLARE_KERNELS                                                                   \
  void edges(const double* ax, const double* ay, const double* bx, const double* by,          \
             std::size_t n, double* dx, double* dy, double* len);                             \
  void vertices(const double* in_x, const double* in_y, const double* in_len,                 \
                const double* out_x, const double* out_y, const double* out_len,              \
                std::size_t n, double* kappa, double* nx, double* ny);                        \
  void advance(double* x, double* y, const double* nx, const double* ny, const double* kappa, \
               std::size_t n, double dt, double shrink);                                      \
  void chord_row(double px, double py, const double* x, const double* y, std::size_t n,       \
                 double* out);                                                                \
  void scale(double* x, double* y, std::size_t n, double s);

namespace scalar {
ICF_DECLARE_KERNELS
}

#if defined(ICF_HAVE_AVX2)
namespace avx2 {
ICF_DECLARE_KERNELS
}
#endif

#undef ICF_DECLARE_KERNELS

}  // namespace icf::kernels
