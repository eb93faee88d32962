#include "solitary/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace solitary {

void Grid1D::validate() const {
  if (n_cells < 3) {
    throw std::invalid_argument("n_cells: need at least 3 (got " + std::to_string(n_cells) + ")");
  }
  if (!(dx > 0.0) || !std::isfinite(dx)) {
    throw std::invalid_argument("dx: must be positive");
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("dt: must be positive");
  }
  if (!std::isfinite(x0)) {
    throw std::invalid_argument("x0: must be finite");
  }
}

Grid1D Grid1D::refined(int level) const {
  if (level < 0) {
    throw std::invalid_argument("refinement level must be non-negative");
  }
  Grid1D g = *this;
  const std::size_t factor = std::size_t{1} << level;
  g.n_cells = (n_cells - 1) * factor + 1;
  g.n_steps = n_steps * factor;
  g.dx = dx / static_cast<double>(factor);
  g.dt = dt / static_cast<double>(factor);
  return g;
}

}  // namespace solitary
