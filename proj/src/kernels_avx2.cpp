#include <immintrin.h>

#include "solitary/kernels.hpp"

namespace solitary::kernels::avx2 {

namespace {

inline __m256d negate(__m256d v) { return _mm256_xor_pd(v, _mm256_set1_pd(-0.0)); }

}  // namespace

void advance_interior(const StencilInput& in, const StencilOutput& out,
                      const StencilCoefficients& c) {
  const std::size_t n = in.u.size();
  if (n < 3) {
    return;
  }
  const double* u = in.u.data();
  const double* h = in.h.data();
  const double* he = in.h_e.data();
  double* u_out = out.u.data();
  double* h_out = out.h.data();

  const double inv_dx_s = 1.0 / c.dx;
  const double inv_2dx_s = 0.5 / c.dx;
  const __m256d inv_dx = _mm256_set1_pd(inv_dx_s);
  const __m256d inv_2dx = _mm256_set1_pd(inv_2dx_s);
  const __m256d inv_dx2 = _mm256_set1_pd(inv_dx_s * inv_dx_s);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d g = _mm256_set1_pd(c.g);
  const __m256d k_h = _mm256_set1_pd(c.k_h);
  const __m256d dt = _mm256_set1_pd(c.dt);
  const bool viscous = c.k_h != 0.0;

  const std::size_t last = n - 1;  // exclusive end of the interior
  std::size_t i = 1;
  for (; i + 4 <= last; i += 4) {
    const __m256d um = _mm256_loadu_pd(u + i - 1);
    const __m256d ui = _mm256_loadu_pd(u + i);
    const __m256d up = _mm256_loadu_pd(u + i + 1);
    const __m256d hm = _mm256_loadu_pd(h + i - 1);
    const __m256d hi = _mm256_loadu_pd(h + i);
    const __m256d hp = _mm256_loadu_pd(h + i + 1);
    const __m256d hem = _mm256_loadu_pd(he + i - 1);
    const __m256d hep = _mm256_loadu_pd(he + i + 1);

    __m256d du;
    __m256d dh;
    if (c.upwind) {
      const __m256d backward = _mm256_cmp_pd(ui, zero, _CMP_GE_OQ);
      const __m256d du_b = _mm256_mul_pd(_mm256_sub_pd(ui, um), inv_dx);
      const __m256d du_f = _mm256_mul_pd(_mm256_sub_pd(up, ui), inv_dx);
      const __m256d dh_b = _mm256_mul_pd(_mm256_sub_pd(hi, hm), inv_dx);
      const __m256d dh_f = _mm256_mul_pd(_mm256_sub_pd(hp, hi), inv_dx);
      du = _mm256_blendv_pd(du_f, du_b, backward);
      dh = _mm256_blendv_pd(dh_f, dh_b, backward);
    } else {
      du = _mm256_mul_pd(_mm256_sub_pd(up, um), inv_2dx);
      dh = _mm256_mul_pd(_mm256_sub_pd(hp, hm), inv_2dx);
    }
    const __m256d du_c = _mm256_mul_pd(_mm256_sub_pd(up, um), inv_2dx);
    const __m256d dhe_c = _mm256_mul_pd(_mm256_sub_pd(hep, hem), inv_2dx);

    __m256d rate_u = _mm256_sub_pd(negate(_mm256_mul_pd(ui, du)), _mm256_mul_pd(g, dhe_c));
    if (viscous) {
      const __m256d h_plus = _mm256_mul_pd(half, _mm256_add_pd(hi, hp));
      const __m256d h_minus = _mm256_mul_pd(half, _mm256_add_pd(hm, hi));
      const __m256d flux = _mm256_sub_pd(_mm256_mul_pd(h_plus, _mm256_sub_pd(up, ui)),
                                         _mm256_mul_pd(h_minus, _mm256_sub_pd(ui, um)));
      const __m256d visc =
          _mm256_div_pd(_mm256_mul_pd(_mm256_mul_pd(k_h, flux), inv_dx2), hi);
      rate_u = _mm256_add_pd(rate_u, visc);
    }
    const __m256d rate_h = _mm256_sub_pd(negate(_mm256_mul_pd(ui, dh)), _mm256_mul_pd(hi, du_c));

    _mm256_storeu_pd(u_out + i, _mm256_add_pd(ui, _mm256_mul_pd(dt, rate_u)));
    _mm256_storeu_pd(h_out + i, _mm256_add_pd(hi, _mm256_mul_pd(dt, rate_h)));
  }

  if (i < last) {
    // Tail through the reference kernel on a window ending at the last cell.
    const std::size_t lo = i - 1;
    const std::size_t len = n - lo;
    scalar::advance_interior(
        StencilInput{in.u.subspan(lo, len), in.h.subspan(lo, len), in.h_e.subspan(lo, len)},
        StencilOutput{out.u.subspan(lo, len), out.h.subspan(lo, len)}, c);
  }
}

void split_elevation(std::span<const double> h, std::span<const double> h_b,
                     std::span<double> h_e) {
  const std::size_t n = h.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(h_e.data() + i,
                     _mm256_sub_pd(_mm256_loadu_pd(h.data() + i), _mm256_loadu_pd(h_b.data() + i)));
  }
  for (; i < n; ++i) {
    h_e[i] = h[i] - h_b[i];
  }
}

}  // namespace solitary::kernels::avx2
