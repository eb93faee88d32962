#pragma once

// Run configuration.  The text format is a flat key = value file:
//
//   # comments start with '#' or ';'
//   preset = table1          # optional; table1 | table2, applied first
//   case = euler             # euler | ns | ndim_audit
//
//   [grid]      n_cells, dx, dt, n_steps, x0
//   [scheme]    advection (upwind|central), bathymetry (analytic|integrated),
//               integration (left_rectangle|trapezoid), cfl_guard,
//               kernel (auto|scalar|avx2)
//   [physics]   c1 (comma-separated sweep), g, k_h, n
//   [output]    dir, formats (csv,svg), snapshots (comma-separated times)
//   [check]     max_linf (optional pass bound on the final velocity error)
//
// Keys outside their section and unknown keys are errors.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "solitary/analytic.hpp"
#include "solitary/grid.hpp"
#include "solitary/solver.hpp"

namespace solitary {

enum class RunCase { euler, ns, ndim_audit };

std::string_view to_string(RunCase c);

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::size_t line, const std::string& what);
  /// 1-based line of the offending entry, 0 for validation errors.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct OutputSpec {
  std::filesystem::path dir = "out";
  bool csv = true;
  bool svg = false;
  std::vector<double> snapshot_times = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
};

struct RunConfig {
  RunCase run_case = RunCase::euler;
  Grid1D grid;
  SchemeConfig scheme;
  std::vector<SolutionParams> params_list;
  OutputSpec output;
  std::optional<double> max_linf;

  /// Throws ConfigError (line 0) naming the offending field.
  void validate() const;

  FlowCase flow_case() const {
    return run_case == RunCase::ns ? FlowCase::navier_stokes : FlowCase::euler;
  }
};

/// "table1": 1000 cells, dx 1e-2, dt 1e-3, 1e4 steps, g 1, c1 {2,4,7}, Euler.
/// "table2": as table1 with dt 1e-4, 1e5 steps, k_h 0.3, c1 {2,3,5,7}, NS.
RunConfig preset(std::string_view name);

RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::filesystem::path& path);

/// Replaces the c1 sweep keeping g, k_h and n.
void override_c1(RunConfig& cfg, const std::vector<double>& c1_values);

/// Parses "2, 4.5,7" into numbers; throws std::invalid_argument.
std::vector<double> parse_number_list(std::string_view text);

}  // namespace solitary
