#include "solitary/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <utility>

namespace solitary {

namespace {

std::string describe(SolverError::Kind kind, std::size_t step, std::size_t cell, double t) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s at step %zu, cell %zu, t = %.6g s",
                kind == SolverError::Kind::non_finite ? "non-finite value" : "non-positive depth",
                step, cell, t);
  return buf;
}

void check_consistency(FlowCase c, const SchemeConfig& scheme, const SolutionParams& p) {
  p.validate();
  scheme.validate();
  if (p.n != 1) {
    throw std::invalid_argument("the solver is one-dimensional; n must be 1");
  }
  if (scheme.g != p.g) {
    throw std::invalid_argument("g: scheme and solution parameters disagree");
  }
  if (scheme.k_h != p.k_h) {
    throw std::invalid_argument("k_h: scheme and solution parameters disagree");
  }
  if (c == FlowCase::euler && p.k_h != 0.0) {
    throw std::invalid_argument("k_h: the Euler case needs k_h == 0");
  }
}

}  // namespace

std::string_view to_string(FlowCase c) {
  return c == FlowCase::euler ? "euler" : "ns";
}

void SchemeConfig::validate() const {
  if (!(cfl_guard > 0.0)) {
    throw std::invalid_argument("cfl_guard: must be positive");
  }
  if (!(g > 0.0)) {
    throw std::invalid_argument("g: must be positive");
  }
  if (!(k_h >= 0.0)) {
    throw std::invalid_argument("k_h: must be non-negative");
  }
}

SolverError::SolverError(Kind kind, std::size_t step, std::size_t cell, FieldState state)
    : std::runtime_error(describe(kind, step, cell, state.t)),
      kind_(kind),
      step_(step),
      cell_(cell),
      state_(std::move(state)) {}

double exact_u(FlowCase, double x, double t, const SolutionParams& p) { return eval_u(x, t, p); }

double exact_h(FlowCase, double x, double t, const SolutionParams& p) { return eval_h(x, t, p); }

double exact_he(FlowCase c, double x, double t, const SolutionParams& p) {
  return c == FlowCase::euler ? eval_he_euler(x, t, p) : eval_he_ns(x, t, p);
}

double exact_hb(FlowCase c, double x, double t, const SolutionParams& p) {
  return c == FlowCase::euler ? eval_hb_euler(x, t, p) : eval_hb_ns(x, t, p);
}

double exact_dhb_dx(FlowCase c, double x, double t, const SolutionParams& p) {
  return c == FlowCase::euler ? eval_dhb_dx_euler(x, t, p) : eval_dhb_dx_ns(x, t, p);
}

void refresh_bathymetry(std::vector<double>& h_b, FlowCase c, const Grid1D& grid, double t,
                        const SchemeConfig& scheme, const SolutionParams& p) {
  h_b.resize(grid.n_cells);
  if (scheme.bathymetry == BathymetrySource::analytic) {
    for (std::size_t i = 0; i < grid.n_cells; ++i) {
      h_b[i] = exact_hb(c, grid.x(i), t, p);
    }
    return;
  }
  const double anchor = exact_hb(c, grid.x0, t, p);
  integrate_bathymetry_into(
      h_b, [&](double x, double tt) { return exact_dhb_dx(c, x, tt, p); }, grid, t, anchor,
      scheme.integration);
}

FieldState initial_state(FlowCase c, const Grid1D& grid, const SchemeConfig& scheme,
                         const SolutionParams& p) {
  grid.validate();
  check_consistency(c, scheme, p);
  FieldState s;
  s.t = 0.0;
  s.u.resize(grid.n_cells);
  s.h.resize(grid.n_cells);
  s.h_e.resize(grid.n_cells);
  for (std::size_t i = 0; i < grid.n_cells; ++i) {
    s.u[i] = exact_u(c, grid.x(i), 0.0, p);
    s.h[i] = exact_h(c, grid.x(i), 0.0, p);
  }
  refresh_bathymetry(s.h_b, c, grid, 0.0, scheme, p);
  kernels::split_elevation(s.h, s.h_b, s.h_e, scheme.isa);
  apply_bcs_in_place(s, 0.0, grid, p, c);
  return s;
}

void apply_bcs_in_place(FieldState& state, double t, const Grid1D& grid, const SolutionParams& p,
                        FlowCase c) {
  const std::size_t n = state.size();
  if (n < 2 || state.h.size() != n || state.h_b.size() != n || state.h_e.size() != n) {
    throw std::invalid_argument("apply_bcs: malformed state");
  }
  for (const std::size_t i : {std::size_t{0}, n - 1}) {
    const double x = grid.x(i);
    state.u[i] = exact_u(c, x, t, p);
    state.h[i] = exact_h(c, x, t, p);
    state.h_e[i] = exact_he(c, x, t, p);
    state.h_b[i] = state.h[i] - state.h_e[i];
  }
}

FieldState apply_bcs(FieldState state, double t, const Grid1D& grid, const SolutionParams& p,
                     FlowCase c) {
  apply_bcs_in_place(state, t, grid, p, c);
  return state;
}

Integrator::Integrator(FlowCase c, const Grid1D& grid, const SchemeConfig& scheme,
                       const SolutionParams& p)
    : case_(c), grid_(grid), scheme_(scheme), params_(p) {
  grid_.validate();
  check_consistency(c, scheme_, params_);
  scheme_.isa = kernels::resolve(scheme_.isa);
  u_next_.resize(grid_.n_cells);
  h_next_.resize(grid_.n_cells);
}

void Integrator::advance(FieldState& state, std::size_t step_index) {
  const std::size_t n = grid_.n_cells;
  if (state.size() != n) {
    throw std::invalid_argument("Integrator::advance: state does not match grid");
  }
  const kernels::StencilCoefficients coeffs{
      grid_.dx, grid_.dt, scheme_.g, case_ == FlowCase::euler ? 0.0 : scheme_.k_h,
      scheme_.advection == Advection::upwind};

  u_next_[0] = state.u[0];
  u_next_[n - 1] = state.u[n - 1];
  h_next_[0] = state.h[0];
  h_next_[n - 1] = state.h[n - 1];
  kernels::advance_interior(kernels::StencilInput{state.u, state.h, state.h_e},
                            kernels::StencilOutput{u_next_, h_next_}, coeffs, scheme_.isa);
  std::swap(state.u, u_next_);
  std::swap(state.h, h_next_);
  state.t += grid_.dt;

  refresh_bathymetry(state.h_b, case_, grid_, state.t, scheme_, params_);
  kernels::split_elevation(state.h, state.h_b, state.h_e, scheme_.isa);

  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(state.u[i]) || !std::isfinite(state.h[i]) ||
        !std::isfinite(state.h_e[i])) {
      throw SolverError(SolverError::Kind::non_finite, step_index, i, state);
    }
    if (!(state.h[i] > 0.0)) {
      throw SolverError(SolverError::Kind::negative_depth, step_index, i, state);
    }
  }
}

double Integrator::stability_number(const FieldState& state) const {
  double umax = 0.0;
  for (const double v : state.u) {
    umax = std::max(umax, std::abs(v));
  }
  const double k = case_ == FlowCase::euler ? 0.0 : scheme_.k_h;
  return umax * grid_.dt / grid_.dx + 2.0 * k * grid_.dt / (grid_.dx * grid_.dx);
}

namespace {

FieldState step_with(FlowCase c, const FieldState& state, const Grid1D& grid,
                     const SchemeConfig& scheme, const SolutionParams& p) {
  Integrator integrator(c, grid, scheme, p);
  FieldState next = state;
  const auto step_index =
      static_cast<std::size_t>(std::llround(state.t / grid.dt)) + 1;
  integrator.advance(next, step_index);
  return next;
}

}  // namespace

FieldState step_euler(const FieldState& state, const Grid1D& grid, const SchemeConfig& scheme,
                      const SolutionParams& p) {
  return step_with(FlowCase::euler, state, grid, scheme, p);
}

FieldState step_ns(const FieldState& state, const Grid1D& grid, const SchemeConfig& scheme,
                   const SolutionParams& p) {
  return step_with(FlowCase::navier_stokes, state, grid, scheme, p);
}

Snapshot make_snapshot(FlowCase c, const Grid1D& grid, const FieldState& state,
                       const SolutionParams& p) {
  Snapshot s;
  s.flow = c;
  s.c1 = p.c1;
  s.t = state.t;
  const std::size_t n = state.size();
  s.x.resize(n);
  s.u_exact.resize(n);
  s.h_exact.resize(n);
  s.he_exact.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = grid.x(i);
    s.x[i] = x;
    s.u_exact[i] = exact_u(c, x, state.t, p);
    s.h_exact[i] = exact_h(c, x, state.t, p);
    s.he_exact[i] = exact_he(c, x, state.t, p);
  }
  s.u_num = state.u;
  s.h_num = state.h;
  s.he_num = state.h_e;
  s.hb = state.h_b;
  return s;
}

RunResult run(FlowCase c, const Grid1D& grid, const SchemeConfig& scheme,
              const SolutionParams& p, const RunOptions& options) {
  Integrator integrator(c, grid, scheme, p);
  RunResult result;
  FieldState state = initial_state(c, grid, scheme, p);

  std::set<std::size_t> snapshot_steps;
  for (const double ts : options.snapshot_times) {
    if (ts < 0.0) {
      continue;
    }
    const auto k = static_cast<std::size_t>(std::llround(ts / grid.dt));
    if (k <= grid.n_steps) {
      snapshot_steps.insert(k);
    }
  }

  auto record = [&](std::size_t k) {
    if (!snapshot_steps.contains(k)) {
      return;
    }
    Snapshot snap = make_snapshot(c, grid, state, p);
    const Norms nu = norms(snap.u_num, snap.u_exact, grid.dx);
    result.per_snapshot.push_back({state.t, nu.l2, nu.linf});
    result.snapshots.push_back(std::move(snap));
  };

  result.max_stability_number = integrator.stability_number(state);
  record(0);
  for (std::size_t k = 1; k <= grid.n_steps; ++k) {
    integrator.advance(state, k);
    apply_bcs_in_place(state, state.t, grid, p, c);
    result.max_stability_number =
        std::max(result.max_stability_number, integrator.stability_number(state));
    record(k);
    if (options.observer) {
      options.observer(k, state);
    }
  }

  if (result.max_stability_number > scheme.cfl_guard) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "stability number %.3g exceeded the advisory guard %.3g",
                  result.max_stability_number, scheme.cfl_guard);
    result.warnings.emplace_back(buf);
  }

  std::vector<double> u_ref(grid.n_cells);
  std::vector<double> h_ref(grid.n_cells);
  for (std::size_t i = 0; i < grid.n_cells; ++i) {
    u_ref[i] = exact_u(c, grid.x(i), state.t, p);
    h_ref[i] = exact_h(c, grid.x(i), state.t, p);
  }
  result.final_u = norms(state.u, u_ref, grid.dx);
  result.final_h = norms(state.h, h_ref, grid.dx);
  result.final_state = std::move(state);
  return result;
}

}  // namespace solitary
