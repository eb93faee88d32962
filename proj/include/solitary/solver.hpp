#pragma once

// Explicit finite-difference solver for the convective-form shallow-water
// system on a dynamic bathymetry:
//
//   u_t = -u u_x - g (h_E)_x [+ (k_H / h) (h u_x)_x]
//   h_t = -u h_x - h u_x,          h_E = h - h_B
//
// Forward Euler in time, sign-selected upwind differences on the
// u-weighted terms, central differences elsewhere.  Both end nodes carry
// Dirichlet data from the closed-form solution; there are no ghost cells.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "solitary/analytic.hpp"
#include "solitary/grid.hpp"
#include "solitary/kernels.hpp"
#include "solitary/manufactured.hpp"
#include "solitary/norms.hpp"

namespace solitary {

enum class FlowCase { euler, navier_stokes };
enum class Advection { upwind, central };
enum class BathymetrySource { analytic, integrated };

std::string_view to_string(FlowCase c);

struct FieldState {
  std::vector<double> u;
  std::vector<double> h;
  std::vector<double> h_b;
  std::vector<double> h_e;
  double t = 0.0;

  std::size_t size() const { return u.size(); }
};

struct SchemeConfig {
  Advection advection = Advection::upwind;
  BathymetrySource bathymetry = BathymetrySource::analytic;
  IntegrationRule integration = IntegrationRule::left_rectangle;
  double g = 1.0;
  double k_h = 0.0;
  double cfl_guard = 1.0;  // advisory bound on |u| dt/dx + 2 k_H dt/dx^2
  kernels::Isa isa = kernels::detected_isa();

  void validate() const;
};

class SolverError : public std::runtime_error {
 public:
  enum class Kind { non_finite, negative_depth };

  SolverError(Kind kind, std::size_t step, std::size_t cell, FieldState state);

  Kind kind() const { return kind_; }
  std::size_t step() const { return step_; }
  std::size_t cell() const { return cell_; }
  /// The offending state, for diagnostics.
  const FieldState& state() const { return state_; }

 private:
  Kind kind_;
  std::size_t step_;
  std::size_t cell_;
  FieldState state_;
};

// Closed-form fields of the chosen case at (x, t).
double exact_u(FlowCase c, double x, double t, const SolutionParams& p);
double exact_h(FlowCase c, double x, double t, const SolutionParams& p);
double exact_he(FlowCase c, double x, double t, const SolutionParams& p);
double exact_hb(FlowCase c, double x, double t, const SolutionParams& p);
double exact_dhb_dx(FlowCase c, double x, double t, const SolutionParams& p);

/// Fills h_B on every node at time t from the configured source.
void refresh_bathymetry(std::vector<double>& h_b, FlowCase c, const Grid1D& grid, double t,
                        const SchemeConfig& scheme, const SolutionParams& p);

/// Closed-form state at t = 0 with h_B from the configured source.
FieldState initial_state(FlowCase c, const Grid1D& grid, const SchemeConfig& scheme,
                         const SolutionParams& p);

/// Overwrites u, h, h_E, h_B at both end nodes with closed-form values at t.
FieldState apply_bcs(FieldState state, double t, const Grid1D& grid, const SolutionParams& p,
                     FlowCase c);
void apply_bcs_in_place(FieldState& state, double t, const Grid1D& grid,
                        const SolutionParams& p, FlowCase c);

/// One time step; boundary nodes keep their t^n values (see apply_bcs).
/// Throws SolverError on non-finite values or h <= 0.
FieldState step_euler(const FieldState& state, const Grid1D& grid, const SchemeConfig& scheme,
                      const SolutionParams& p);
FieldState step_ns(const FieldState& state, const Grid1D& grid, const SchemeConfig& scheme,
                   const SolutionParams& p);

/// Reusable stepper; owns the scratch arrays so long runs do not allocate.
class Integrator {
 public:
  Integrator(FlowCase c, const Grid1D& grid, const SchemeConfig& scheme,
             const SolutionParams& p);

  /// Advances `state` by one dt in place; `step_index` only labels errors.
  void advance(FieldState& state, std::size_t step_index = 0);

  /// |u|_max dt/dx + 2 k_H dt/dx^2 of the given state.
  double stability_number(const FieldState& state) const;

 private:
  FlowCase case_;
  Grid1D grid_;
  SchemeConfig scheme_;
  SolutionParams params_;
  std::vector<double> u_next_;
  std::vector<double> h_next_;
};

struct Snapshot {
  FlowCase flow = FlowCase::euler;
  double c1 = 0.0;
  double t = 0.0;
  std::vector<double> x;
  std::vector<double> u_num, u_exact;
  std::vector<double> h_num, h_exact;
  std::vector<double> he_num, he_exact;
  std::vector<double> hb;
};

Snapshot make_snapshot(FlowCase c, const Grid1D& grid, const FieldState& state,
                       const SolutionParams& p);

struct SnapshotNorms {
  double t = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
};

struct RunOptions {
  /// Times at which snapshots are stored; the nearest step is used.
  std::vector<double> snapshot_times = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  /// Called after every completed step with the step index (1-based).
  std::function<void(std::size_t, const FieldState&)> observer;
};

struct RunResult {
  Norms final_u;  // interior velocity error at the last step
  Norms final_h;
  std::vector<SnapshotNorms> per_snapshot;
  std::vector<Snapshot> snapshots;
  FieldState final_state;
  double max_stability_number = 0.0;
  std::vector<std::string> warnings;
};

/// Initialise from the closed form, then repeat step -> apply_bcs for
/// grid.n_steps steps.  SolverError propagates with the step index.
RunResult run(FlowCase c, const Grid1D& grid, const SchemeConfig& scheme,
              const SolutionParams& p, const RunOptions& options = {});

}  // namespace solitary
