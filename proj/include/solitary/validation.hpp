#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "solitary/analytic.hpp"
#include "solitary/grid.hpp"
#include "solitary/norms.hpp"
#include "solitary/solver.hpp"

namespace solitary {

/// Maxima of the PDE residuals over a set of sample points.
struct ResidualSummary {
  double continuity = 0.0;  // dt h + sum_i d_i(h U_i)
  double momentum = 0.0;    // worst component of the conservation-form momentum balance
  double splitting = 0.0;   // |h - h_B - h_E|
  double gradient = 0.0;    // |dh_B/dr_j (closed form) - FD of h_B|
  std::size_t points = 0;
  double fd_step = 0.0;

  double worst_pde() const { return continuity > momentum ? continuity : momentum; }
};

/// Field closures in n spatial dimensions plus the physics constants.
struct FieldModel {
  int n = 1;
  double g = 1.0;
  double k_h = 0.0;
  std::function<double(const SpaceTimePoint&)> h;
  std::function<double(const SpaceTimePoint&, int)> u;  // spatial component j
  std::function<double(const SpaceTimePoint&)> h_e;
  std::function<double(const SpaceTimePoint&)> h_b;
  std::function<double(const SpaceTimePoint&, int)> dhb_dr;
};

/// 1D closed forms of the given case.
FieldModel model_1d(FlowCase c, const SolutionParams& p);
/// n-D closed forms (eval_ndim_fields).
FieldModel model_ndim(const SolutionParams& p);
/// n-D forms as first transcribed; expected to fail the momentum audit.
FieldModel model_ndim_transcribed(const SolutionParams& p);
/// 1D Navier-Stokes forms as first transcribed.
FieldModel model_1d_ns_transcribed(const SolutionParams& p);

inline constexpr double kResidualFdStep = 1e-3;
inline constexpr double kResidualTolerance = 1e-6;

/// Deterministic pseudo-random points; coordinates uniform in
/// [-span/2, span/2], t uniform in [0, 10].
std::vector<SpaceTimePoint> sample_points(int n, std::size_t count, std::uint64_t seed,
                                          double span = 20.0);

/// Residuals by 4th-order central differences with step `fd_step`.
ResidualSummary residual_audit(const FieldModel& model, std::span<const SpaceTimePoint> points,
                               double fd_step = kResidualFdStep);

struct NdimAuditReport {
  ResidualSummary transcribed;
  ResidualSummary rederived;
  bool transcribed_consistent = false;
  /// Non-empty whenever the transcribed forms fail; names the failing terms.
  std::string diagnostic;
};

NdimAuditReport ndim_audit(const SolutionParams& p, std::size_t count, std::uint64_t seed,
                           double fd_step = kResidualFdStep,
                           double tolerance = kResidualTolerance);

struct RateFit {
  std::optional<double> rate;  // least-squares slope of log err vs log dx
  bool exact = false;          // every error was exactly zero
};

RateFit fit_rate(std::span<const double> spacing, std::span<const double> error);

struct ConvergenceLevel {
  Grid1D grid;
  Norms error;
  bool blew_up = false;
  std::string message;
};

struct ConvergenceReport {
  std::vector<ConvergenceLevel> levels;
  RateFit fit;
  bool blew_up = false;
};

/// Error of one run on the given grid.
using LevelRunner = std::function<Norms(const Grid1D&)>;

/// Runs `levels` grids base.refined(0..levels-1) and fits the L-inf rate.
/// Throws std::invalid_argument when levels < 3.  A SolverError on any level
/// marks the report as blown up and stops the study.
ConvergenceReport convergence_study(const Grid1D& base, int levels, const LevelRunner& runner);

/// Velocity error of the finite-difference solver at base.t_end().
ConvergenceReport convergence_study(FlowCase c, const Grid1D& base, int levels,
                                    const SchemeConfig& scheme, const SolutionParams& p);

struct ErrorReport {
  double l2 = 0.0;
  double linf = 0.0;
  std::vector<SnapshotNorms> per_snapshot;
  std::optional<double> convergence_rate;
  std::optional<ResidualSummary> residual_summary;
};

ErrorReport make_report(const RunResult& run);

}  // namespace solitary
