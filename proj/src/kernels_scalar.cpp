#include "solitary/kernels.hpp"

namespace solitary::kernels::scalar {

void advance_interior(const StencilInput& in, const StencilOutput& out,
                      const StencilCoefficients& c) {
  const std::size_t n = in.u.size();
  const double* u = in.u.data();
  const double* h = in.h.data();
  const double* he = in.h_e.data();
  const double inv_dx = 1.0 / c.dx;
  const double inv_2dx = 0.5 / c.dx;
  const double inv_dx2 = inv_dx * inv_dx;
  const bool viscous = c.k_h != 0.0;

  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double ui = u[i];
    const double hi = h[i];
    double du;
    double dh;
    if (c.upwind) {
      if (ui >= 0.0) {
        du = (ui - u[i - 1]) * inv_dx;
        dh = (hi - h[i - 1]) * inv_dx;
      } else {
        du = (u[i + 1] - ui) * inv_dx;
        dh = (h[i + 1] - hi) * inv_dx;
      }
    } else {
      du = (u[i + 1] - u[i - 1]) * inv_2dx;
      dh = (h[i + 1] - h[i - 1]) * inv_2dx;
    }
    const double du_c = (u[i + 1] - u[i - 1]) * inv_2dx;
    const double dhe_c = (he[i + 1] - he[i - 1]) * inv_2dx;

    double rate_u = -(ui * du) - c.g * dhe_c;
    if (viscous) {
      const double h_plus = 0.5 * (hi + h[i + 1]);
      const double h_minus = 0.5 * (h[i - 1] + hi);
      const double flux = h_plus * (u[i + 1] - ui) - h_minus * (ui - u[i - 1]);
      rate_u = rate_u + c.k_h * flux * inv_dx2 / hi;
    }
    const double rate_h = -(ui * dh) - hi * du_c;

    out.u[i] = ui + c.dt * rate_u;
    out.h[i] = hi + c.dt * rate_h;
  }
}

void split_elevation(std::span<const double> h, std::span<const double> h_b,
                     std::span<double> h_e) {
  for (std::size_t i = 0; i < h.size(); ++i) {
    h_e[i] = h[i] - h_b[i];
  }
}

}  // namespace solitary::kernels::scalar
