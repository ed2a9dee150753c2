// Compiled with -mavx2 only; entered solely through the dispatch table after a
// runtime CPU check.

#include <immintrin.h>

#include "kernel_ops.hpp"
#include "kernels_impl.hpp"

namespace icf::kernels::avx2 {

namespace {
constexpr std::size_t kLanes = 4;
}

void edges(const double* ax, const double* ay, const double* bx, const double* by,
           std::size_t n, double* dx, double* dy, double* len) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d vx = _mm256_sub_pd(_mm256_loadu_pd(bx + i), _mm256_loadu_pd(ax + i));
    const __m256d vy = _mm256_sub_pd(_mm256_loadu_pd(by + i), _mm256_loadu_pd(ay + i));
    const __m256d l2 = _mm256_add_pd(_mm256_mul_pd(vx, vx), _mm256_mul_pd(vy, vy));
    _mm256_storeu_pd(dx + i, vx);
    _mm256_storeu_pd(dy + i, vy);
    _mm256_storeu_pd(len + i, _mm256_sqrt_pd(l2));
  }
  for (; i < n; ++i) detail::edge_op(ax[i], ay[i], bx[i], by[i], dx[i], dy[i], len[i]);
}

void vertices(const double* in_x, const double* in_y, const double* in_len,
              const double* out_x, const double* out_y, const double* out_len, std::size_t n,
              double* kappa, double* nx, double* ny) {
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d sign = _mm256_set1_pd(-0.0);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d ix = _mm256_loadu_pd(in_x + i);
    const __m256d iy = _mm256_loadu_pd(in_y + i);
    const __m256d il = _mm256_loadu_pd(in_len + i);
    const __m256d ox = _mm256_loadu_pd(out_x + i);
    const __m256d oy = _mm256_loadu_pd(out_y + i);
    const __m256d ol = _mm256_loadu_pd(out_len + i);

    const __m256d cr = _mm256_sub_pd(_mm256_mul_pd(ix, oy), _mm256_mul_pd(iy, ox));
    const __m256d sx = _mm256_add_pd(ix, ox);
    const __m256d sy = _mm256_add_pd(iy, oy);
    const __m256d chord =
        _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(sx, sx), _mm256_mul_pd(sy, sy)));
    const __m256d k = _mm256_div_pd(_mm256_mul_pd(two, cr),
                                    _mm256_mul_pd(_mm256_mul_pd(il, ol), chord));
    _mm256_storeu_pd(kappa + i, k);

    const __m256d tx = _mm256_add_pd(_mm256_div_pd(ix, il), _mm256_div_pd(ox, ol));
    const __m256d ty = _mm256_add_pd(_mm256_div_pd(iy, il), _mm256_div_pd(oy, ol));
    const __m256d tn =
        _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(tx, tx), _mm256_mul_pd(ty, ty)));
    _mm256_storeu_pd(nx + i, _mm256_div_pd(ty, tn));
    // -tx / tn: negate by sign flip, which is exact.
    _mm256_storeu_pd(ny + i, _mm256_div_pd(_mm256_xor_pd(tx, sign), tn));
  }
  for (; i < n; ++i) {
    detail::vertex_op(in_x[i], in_y[i], in_len[i], out_x[i], out_y[i], out_len[i], kappa[i],
                      nx[i], ny[i]);
  }
}

void advance(double* x, double* y, const double* nx, const double* ny, const double* kappa,
             std::size_t n, double dt, double shrink) {
  const __m256d vdt = _mm256_set1_pd(dt);
  const __m256d vs = _mm256_set1_pd(shrink);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d px = _mm256_loadu_pd(x + i);
    const __m256d py = _mm256_loadu_pd(y + i);
    const __m256d k = _mm256_loadu_pd(kappa + i);
    const __m256d vx =
        _mm256_sub_pd(_mm256_div_pd(_mm256_loadu_pd(nx + i), k), _mm256_mul_pd(vs, px));
    const __m256d vy =
        _mm256_sub_pd(_mm256_div_pd(_mm256_loadu_pd(ny + i), k), _mm256_mul_pd(vs, py));
    _mm256_storeu_pd(x + i, _mm256_add_pd(px, _mm256_mul_pd(vdt, vx)));
    _mm256_storeu_pd(y + i, _mm256_add_pd(py, _mm256_mul_pd(vdt, vy)));
  }
  for (; i < n; ++i) detail::advance_op(x[i], y[i], nx[i], ny[i], kappa[i], dt, shrink);
}

void chord_row(double px, double py, const double* x, const double* y, std::size_t n,
               double* out) {
  const __m256d vpx = _mm256_set1_pd(px);
  const __m256d vpy = _mm256_set1_pd(py);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(x + i), vpx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(y + i), vpy);
    _mm256_storeu_pd(
        out + i, _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy))));
  }
  for (; i < n; ++i) out[i] = detail::chord_op(px, py, x[i], y[i]);
}

void scale(double* x, double* y, std::size_t n, double s) {
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    _mm256_storeu_pd(x + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), vs));
    _mm256_storeu_pd(y + i, _mm256_mul_pd(_mm256_loadu_pd(y + i), vs));
  }
  for (; i < n; ++i) {
    x[i] *= s;
    y[i] *= s;
  }
}

}  // namespace icf::kernels::avx2
