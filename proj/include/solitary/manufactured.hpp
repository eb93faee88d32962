#pragma once

// Manufactured-solution pipeline for the 1D system with a split column
// h = h_E + h_B:
//
//   1. choose closures h(x,t), u(x,t) and check they satisfy continuity;
//   2. solve the momentum balance pointwise for the only unknown dh_B/dx;
//   3. integrate that slope in x from a boundary anchor.
//
// Step 3 lets a solver use closures whose bathymetry has no convenient
// antiderivative: the quadrature error enters the numerical run only.

#include <functional>
#include <optional>
#include <vector>

#include "solitary/analytic.hpp"
#include "solitary/grid.hpp"

namespace solitary {

using ScalarField = std::function<double(double x, double t)>;

struct ClosurePair {
  ScalarField h;
  ScalarField u;
  SolutionParams params;
};

/// The solitary pair h = c1 + sin(x+t), u = 1/h - 1.
ClosurePair solitary_closures(const SolutionParams& params);

/// Central-difference steps used on closures; each is scaled by max(1, |coord|).
struct FdSteps {
  double first;   // eps^(1/3)
  double nested;  // eps^(1/4), for the second-derivative viscous term
};
FdSteps default_fd_steps();

inline constexpr double kContinuityTolerance = 1e-6;

/// dh/dt + d(hu)/dx at every grid node.  `step` overrides the relative step.
std::vector<double> continuity_residual(const ClosurePair& pair, const Grid1D& grid, double t,
                                        std::optional<double> step = std::nullopt);

/// True when max |continuity_residual| <= tolerance.
bool satisfies_continuity(const ClosurePair& pair, const Grid1D& grid, double t,
                          double tolerance = kContinuityTolerance);

/// dh_B/dx = dh/dx + [d(hu)/dt + d(hu^2)/dx - k_H d(h du/dx)/dx] / (g h).
/// Throws std::domain_error when h <= 0 at (x, t).
double bathymetry_slope(const ClosurePair& pair, double x, double t);

enum class IntegrationRule { left_rectangle, trapezoid };

struct BathymetryTrace {
  std::vector<double> x;
  std::vector<double> h_b;
  double t = 0.0;
  double anchor_x = 0.0;
  double anchor_value = 0.0;
};

/// h_B[0] = anchor; h_B[i] = h_B[i-1] + slope(x_{i-1}, t) dx (left rectangle),
/// or the trapezoid average of both end slopes.
BathymetryTrace integrate_bathymetry(const ScalarField& slope, const Grid1D& grid, double t,
                                     double anchor_value,
                                     IntegrationRule rule = IntegrationRule::left_rectangle);

/// Allocation-free variant writing grid.n_cells values into `out`.
void integrate_bathymetry_into(std::vector<double>& out, const ScalarField& slope,
                               const Grid1D& grid, double t, double anchor_value,
                               IntegrationRule rule = IntegrationRule::left_rectangle);

/// Integrated value at the right end minus the expected right boundary value.
double right_end_mismatch(const BathymetryTrace& trace, double expected_right_value);

}  // namespace solitary
