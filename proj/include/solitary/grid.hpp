#pragma once

#include <cstddef>

namespace solitary {

/// Uniform 1D space-time grid.  Nodes sit at x0 + i dx, i = 0 .. n_cells-1;
/// the two end nodes carry Dirichlet data.
struct Grid1D {
  std::size_t n_cells = 1000;
  double dx = 1e-2;
  double dt = 1e-3;
  std::size_t n_steps = 10000;
  double x0 = 0.0;

  void validate() const;

  double x(std::size_t i) const { return x0 + static_cast<double>(i) * dx; }
  double x_last() const { return x(n_cells - 1); }
  double length() const { return x_last() - x0; }
  double t_end() const { return static_cast<double>(n_steps) * dt; }

  /// Same end points and end time with dx and dt divided by 2^level.
  Grid1D refined(int level) const;
};

}  // namespace solitary
