#pragma once

// Closed-form solitary solutions of the 1D and n-D shallow-water Euler and
// Navier-Stokes equations on a dynamic bathymetry.
//
// Every field is a function of the phase s = sum_i r_i + t only:
//
//   h   = c1 + sin s
//   U_i = 1/h - 1/n              (U_t = 1 is implied, never stored)
//   h_E = -(n/g) (1/(2 h^2) + k_H (a(s) + cos s / h^2))
//   h_B = h - h_E
//
// where a is the continuous antiderivative of cos^2 s / h^3.  With k_H = 0
// and n = 1 this is the Euler family; k_H > 0 gives the eddy-viscosity
// (Navier-Stokes) family.
//
// All functions are pure and thread-safe.

#include <span>
#include <vector>

namespace solitary {

struct SolutionParams {
  double c1 = 2.0;   // dimensionless offset, must exceed 1
  double g = 1.0;    // gravitational acceleration [m s^-2]
  double k_h = 0.0;  // horizontal eddy viscosity [m^2 s^-1]
  int n = 1;         // spatial dimension count

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// Smallest accepted c1; sqrt(c1^2 - 1) and h > 0 both need c1 > 1.
inline constexpr double kMinC1 = 1.0 + 1e-9;

struct SpaceTimePoint {
  std::vector<double> r;  // spatial coordinates [m]
  double t = 0.0;         // time [s]
};

struct AnalyticFields {
  double h = 0.0;
  std::vector<double> u;       // n spatial velocity components
  double h_e = 0.0;
  double h_b = 0.0;
  std::vector<double> dhb_dr;  // gradient of h_B, one entry per spatial axis
};

double phase(double x, double t);
double phase(const SpaceTimePoint& p);

double eval_h(double x, double t, const SolutionParams& p);
double eval_h(const SpaceTimePoint& pt, const SolutionParams& p);

/// 1D velocity (c1 + sin(x+t))^-1 - 1.
double eval_u(double x, double t, const SolutionParams& p);
/// Spatial velocity components, each (c1 + sin s)^-1 - 1/n.
std::vector<double> eval_u(const SpaceTimePoint& pt, const SolutionParams& p);

// Euler family (k_H = 0, n = 1).  hB/hE throw std::invalid_argument when
// k_H != 0 so a viscous parameter set is never silently treated as inviscid.
double eval_hb_euler(double x, double t, const SolutionParams& p);
double eval_he_euler(double x, double t, const SolutionParams& p);
double eval_dhb_dx_euler(double x, double t, const SolutionParams& p);

/// Branch-continued closed form
///
///   P(s) = (2T + 2c1) / ((c1^2-1)(c1 T^2 + 2T + c1))
///        + 2 atan((c1 T + 1)/sqrt(c1^2-1)) (c1^2-1)^{-3/2},   T = tan(s/2)
///
/// made continuous across the tan poles at s = (2k+1)pi.  dP/ds equals
/// -sin s / (c1 + sin s)^2.  Throws std::invalid_argument for c1 <= 1.
double sine_ratio_primitive(double s, double c1);

/// Continuous antiderivative of cos^2 s / (c1 + sin s)^3, normalised so
/// that a(0) = P(0).  Grows by pi (c1^2-1)^{-3/2} per 2 pi of phase.
double eval_a(double s, double c1);
double eval_a(const SpaceTimePoint& pt, const SolutionParams& p);

/// Increase of eval_a over one period of the phase.
double eddy_primitive_period_increment(double c1);

// Navier-Stokes family, 1D.  k_H = 0 reproduces the Euler functions exactly.
double eval_hb_ns(double x, double t, const SolutionParams& p);
double eval_he_ns(double x, double t, const SolutionParams& p);
double eval_dhb_dx_ns(double x, double t, const SolutionParams& p);

/// All fields at an n-dimensional point; r.size() must equal p.n.
AnalyticFields eval_ndim_fields(const SpaceTimePoint& pt, const SolutionParams& p);

// Closed forms as first transcribed, before the antiderivatives were
// re-derived from the bathymetry gradient.  They violate the momentum
// balance and are kept so the residual audit can demonstrate that.
namespace transcribed {

double eval_hb_ns(double x, double t, const SolutionParams& p);
double eval_he_ns(double x, double t, const SolutionParams& p);
AnalyticFields eval_ndim_fields(const SpaceTimePoint& pt, const SolutionParams& p);

}  // namespace transcribed

}  // namespace solitary
