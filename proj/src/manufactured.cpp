#include "solitary/manufactured.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace solitary {

namespace {

double scaled(double base, double coord) { return base * std::max(1.0, std::abs(coord)); }

template <class F>
double central(F&& f, double at, double step) {
  const double e = scaled(step, at);
  return (f(at + e) - f(at - e)) / (2.0 * e);
}

}  // namespace

ClosurePair solitary_closures(const SolutionParams& params) {
  params.validate();
  return ClosurePair{
      [params](double x, double t) { return eval_h(x, t, params); },
      [params](double x, double t) { return eval_u(x, t, params); },
      params,
  };
}

FdSteps default_fd_steps() {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  return FdSteps{std::cbrt(eps), std::sqrt(std::sqrt(eps))};
}

std::vector<double> continuity_residual(const ClosurePair& pair, const Grid1D& grid, double t,
                                        std::optional<double> step) {
  grid.validate();
  const double e = step.value_or(default_fd_steps().first);
  std::vector<double> res(grid.n_cells);
  for (std::size_t i = 0; i < grid.n_cells; ++i) {
    const double x = grid.x(i);
    const double dh_dt = central([&](double tt) { return pair.h(x, tt); }, t, e);
    const double dq_dx = central([&](double xx) { return pair.h(xx, t) * pair.u(xx, t); }, x, e);
    res[i] = dh_dt + dq_dx;
  }
  return res;
}

bool satisfies_continuity(const ClosurePair& pair, const Grid1D& grid, double t,
                          double tolerance) {
  const auto res = continuity_residual(pair, grid, t);
  return std::all_of(res.begin(), res.end(),
                     [tolerance](double r) { return std::abs(r) <= tolerance; });
}

double bathymetry_slope(const ClosurePair& pair, double x, double t) {
  const double h = pair.h(x, t);
  if (!(h > 0.0)) {
    throw std::domain_error("bathymetry_slope: non-positive column h at x=" + std::to_string(x));
  }
  const FdSteps steps = default_fd_steps();
  const auto& hf = pair.h;
  const auto& uf = pair.u;

  const double dh_dx = central([&](double xx) { return hf(xx, t); }, x, steps.first);
  const double dq_dt = central([&](double tt) { return hf(x, tt) * uf(x, tt); }, t, steps.first);
  const double dflux_dx = central(
      [&](double xx) {
        const double u = uf(xx, t);
        return hf(xx, t) * u * u;
      },
      x, steps.first);

  double viscous = 0.0;
  if (pair.params.k_h != 0.0) {
    viscous = pair.params.k_h *
              central(
                  [&](double xx) {
                    return hf(xx, t) *
                           central([&](double y) { return uf(y, t); }, xx, steps.nested);
                  },
                  x, steps.nested);
  }
  return dh_dx + (dq_dt + dflux_dx - viscous) / (pair.params.g * h);
}

void integrate_bathymetry_into(std::vector<double>& out, const ScalarField& slope,
                               const Grid1D& grid, double t, double anchor_value,
                               IntegrationRule rule) {
  grid.validate();
  out.resize(grid.n_cells);
  out[0] = anchor_value;
  double left = slope(grid.x(0), t);
  for (std::size_t i = 1; i < grid.n_cells; ++i) {
    if (rule == IntegrationRule::left_rectangle) {
      out[i] = out[i - 1] + left * grid.dx;
      left = slope(grid.x(i), t);
    } else {
      const double right = slope(grid.x(i), t);
      out[i] = out[i - 1] + 0.5 * (left + right) * grid.dx;
      left = right;
    }
  }
}

BathymetryTrace integrate_bathymetry(const ScalarField& slope, const Grid1D& grid, double t,
                                     double anchor_value, IntegrationRule rule) {
  BathymetryTrace trace;
  integrate_bathymetry_into(trace.h_b, slope, grid, t, anchor_value, rule);
  trace.x.resize(grid.n_cells);
  for (std::size_t i = 0; i < grid.n_cells; ++i) {
    trace.x[i] = grid.x(i);
  }
  trace.t = t;
  trace.anchor_x = grid.x0;
  trace.anchor_value = anchor_value;
  return trace;
}

double right_end_mismatch(const BathymetryTrace& trace, double expected_right_value) {
  if (trace.h_b.empty()) {
    throw std::invalid_argument("right_end_mismatch: empty trace");
  }
  return trace.h_b.back() - expected_right_value;
}

}  // namespace solitary
