#pragma once

#include <functional>
#include <span>

#include "solitary/grid.hpp"

namespace solitary {

struct Norms {
  double l2 = 0.0;    // sqrt(sum e_i^2 dx) over interior nodes
  double linf = 0.0;  // max |e_i| over interior nodes
};

/// Error norms of `numeric` against `exact`, interior nodes only (the end
/// nodes are Dirichlet and exact by construction).  Throws
/// std::invalid_argument on length mismatch.
Norms norms(std::span<const double> numeric, std::span<const double> exact, double dx);

/// Same, with the exact field given as a closure evaluated at the grid nodes.
Norms norms(std::span<const double> numeric, const std::function<double(double, double)>& exact,
            const Grid1D& grid, double t);

}  // namespace solitary
