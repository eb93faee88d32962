#include "solitary/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace solitary {

Norms norms(std::span<const double> numeric, std::span<const double> exact, double dx) {
  if (numeric.size() != exact.size()) {
    throw std::invalid_argument("norms: length mismatch");
  }
  Norms out;
  if (numeric.size() < 3) {
    return out;
  }
  double sum = 0.0;
  for (std::size_t i = 1; i + 1 < numeric.size(); ++i) {
    const double e = std::abs(numeric[i] - exact[i]);
    sum += e * e * dx;
    // NaN must propagate, std::max would drop it.
    if (!(e <= out.linf)) {
      out.linf = std::isnan(out.linf) ? out.linf : e;
    }
  }
  out.l2 = std::sqrt(sum);
  return out;
}

Norms norms(std::span<const double> numeric, const std::function<double(double, double)>& exact,
            const Grid1D& grid, double t) {
  if (numeric.size() != grid.n_cells) {
    throw std::invalid_argument("norms: field length does not match grid");
  }
  std::vector<double> ref(grid.n_cells);
  for (std::size_t i = 0; i < grid.n_cells; ++i) {
    ref[i] = exact(grid.x(i), t);
  }
  return norms(numeric, ref, grid.dx);
}

}  // namespace solitary
