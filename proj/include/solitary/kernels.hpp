#pragma once

// Per-cell update kernels for the explicit solver.  Every kernel has a
// scalar reference implementation; SIMD variants must reproduce it bit for
// bit (same operation order, no FMA contraction, no reciprocal shortcuts).

#include <cstddef>
#include <span>
#include <string_view>

namespace solitary::kernels {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

/// Best variant supported by both this build and the running CPU.
Isa detected_isa();
bool is_supported(Isa isa);
/// `requested` if supported, otherwise the scalar reference.
Isa resolve(Isa requested);

struct StencilCoefficients {
  double dx = 0.0;
  double dt = 0.0;
  double g = 1.0;
  double k_h = 0.0;
  bool upwind = true;  // false: central differences for the u-weighted terms
};

/// Input arrays at t^n; cells [1, n-2] of the outputs are written, the two
/// end cells are left untouched.
struct StencilInput {
  std::span<const double> u;
  std::span<const double> h;
  std::span<const double> h_e;
};

struct StencilOutput {
  std::span<double> u;
  std::span<double> h;
};

/// One forward-Euler step of the convective system
///   u_t = -u u_x - g (h_E)_x + (k_H / h) (h u_x)_x
///   h_t = -u h_x - h u_x
void advance_interior(const StencilInput& in, const StencilOutput& out,
                      const StencilCoefficients& c, Isa isa);

/// h_e[i] = h[i] - h_b[i] over the whole span.
void split_elevation(std::span<const double> h, std::span<const double> h_b,
                     std::span<double> h_e, Isa isa);

namespace scalar {
void advance_interior(const StencilInput& in, const StencilOutput& out,
                      const StencilCoefficients& c);
void split_elevation(std::span<const double> h, std::span<const double> h_b,
                     std::span<double> h_e);
}  // namespace scalar

#if defined(SOLITARY_HAVE_AVX2)
namespace avx2 {
void advance_interior(const StencilInput& in, const StencilOutput& out,
                      const StencilCoefficients& c);
void split_elevation(std::span<const double> h, std::span<const double> h_b,
                     std::span<double> h_e);
}  // namespace avx2
#endif

}  // namespace solitary::kernels
