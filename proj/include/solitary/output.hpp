#pragma once

// CSV and SVG artifacts.  CSV columns:
//   x,u_num,u_exact,h_num,h_exact,hE_num,hE_exact,hB
// comma separated, '.' decimal point, '\n' line ends, 17 significant digits
// so that reading a file back reproduces every value bit for bit.

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "solitary/analytic.hpp"
#include "solitary/solver.hpp"

namespace solitary {

inline constexpr const char* kCsvHeader = "x,u_num,u_exact,h_num,h_exact,hE_num,hE_exact,hB";

/// "<case>_c1-<c1>_t-<t>.csv" (or .svg).
std::string snapshot_stem(const Snapshot& s);

/// One CSV per snapshot in `dir` (created if missing); returns the paths.
/// Throws std::invalid_argument for an empty list (nothing is written) and
/// std::runtime_error on I/O failure.
std::vector<std::filesystem::path> emit_csv(std::span<const Snapshot> snapshots,
                                            const std::filesystem::path& dir);

/// Writes a single snapshot to `path`.
void write_snapshot_csv(const Snapshot& s, const std::filesystem::path& path);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;
};

/// Parses a file written by emit_csv (or any numeric CSV with a header).
CsvTable read_csv(const std::filesystem::path& path);

/// Two-panel overlay: bathymetry (left) and velocity (right), closed form
/// drawn as lines, numerical values as markers, one colour per snapshot.
void emit_plot(std::span<const Snapshot> snapshots, const std::filesystem::path& path,
               const std::string& title = {});

/// h_B(x, t) sampled on a space-time lattice with k_H switched on at t_switch.
struct BathymetryEvolution {
  std::vector<double> x;
  std::vector<double> t;
  std::vector<std::vector<double>> h_b;  // [time][x]
  double t_switch = 0.0;
};

BathymetryEvolution bathymetry_evolution(const SolutionParams& viscous, double t_switch,
                                         double t_end, double dt_sample, const Grid1D& grid,
                                         std::size_t x_stride = 10);

void emit_bathymetry_csv(const BathymetryEvolution& ev, const std::filesystem::path& path);
void emit_bathymetry_plot(const BathymetryEvolution& ev, const std::filesystem::path& path,
                          const std::string& title = {});

/// Shortest decimal form with 17 significant digits.
std::string format_double(double v);

}  // namespace solitary
