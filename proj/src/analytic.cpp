#include "solitary/analytic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace solitary {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_c1(double c1) {
  if (!(c1 > kMinC1)) {
    throw std::invalid_argument("c1 must exceed 1 (got " + std::to_string(c1) + ")");
  }
}

void require_inviscid_1d(const SolutionParams& p) {
  if (p.k_h != 0.0) {
    throw std::invalid_argument("Euler closed forms need k_h == 0; use the Navier-Stokes variant");
  }
  if (p.n != 1) {
    throw std::invalid_argument("1D closed forms need n == 1");
  }
}

void require_1d(const SolutionParams& p) {
  if (p.n != 1) {
    throw std::invalid_argument("1D closed forms need n == 1");
  }
}

// The closed form evaluated on a single tan branch, s in [-pi, pi].
double primitive_on_branch(double s, double c1) {
  const double m = c1 * c1 - 1.0;
  const double root = std::sqrt(m);
  const double tau = std::tan(0.5 * s);
  return (2.0 * tau + 2.0 * c1) / (m * (c1 * tau * tau + 2.0 * tau + c1)) +
         2.0 * std::atan((c1 * tau + 1.0) / root) / (m * root);
}

// sin and cos together, so every caller sees the same rounding whether or
// not the compiler would have fused the two calls.
struct SinCos {
  double sn;
  double cs;
};

[[gnu::noinline]] SinCos sin_cos(double s) { return {std::sin(s), std::cos(s)}; }

// Elevation of the 1D family as a function of phase, k_h and g.
double elevation(double s, double c1, double g, double k_h) {
  const auto [sn, cs] = sin_cos(s);
  const double h = c1 + sn;
  const double inv_h2 = 1.0 / (h * h);
  double e = -inv_h2 / (2.0 * g);
  if (k_h != 0.0) {
    e -= k_h * (eval_a(s, c1) + cs * inv_h2) / g;
  }
  return e;
}

double bathymetry(double s, double c1, double g, double k_h) {
  const auto [sn, cs] = sin_cos(s);
  const double h = c1 + sn;
  double b = h + 1.0 / (2.0 * g * h * h);
  if (k_h != 0.0) {
    b += k_h * (eval_a(s, c1) + cs / (h * h)) / g;
  }
  return b;
}

double bathymetry_slope(double s, double c1, double g, double k_h) {
  const auto [sn, cs] = sin_cos(s);
  const double h = c1 + sn;
  const double h3 = h * h * h;
  double d = cs - cs / (g * h3);
  if (k_h != 0.0) {
    d -= k_h * (sn * h + cs * cs) / (g * h3);
  }
  return d;
}

}  // namespace

void SolutionParams::validate() const {
  if (!(c1 > kMinC1)) {
    throw std::invalid_argument("c1: must exceed 1 (got " + std::to_string(c1) + ")");
  }
  if (!(g > 0.0) || !std::isfinite(g)) {
    throw std::invalid_argument("g: must be positive (got " + std::to_string(g) + ")");
  }
  if (!(k_h >= 0.0) || !std::isfinite(k_h)) {
    throw std::invalid_argument("k_h: must be non-negative (got " + std::to_string(k_h) + ")");
  }
  if (n < 1) {
    throw std::invalid_argument("n: must be at least 1 (got " + std::to_string(n) + ")");
  }
}

double phase(double x, double t) { return x + t; }

double phase(const SpaceTimePoint& p) {
  return std::accumulate(p.r.begin(), p.r.end(), 0.0) + p.t;
}

double eval_h(double x, double t, const SolutionParams& p) {
  return p.c1 + sin_cos(phase(x, t)).sn;
}

double eval_h(const SpaceTimePoint& pt, const SolutionParams& p) {
  return p.c1 + sin_cos(phase(pt)).sn;
}

double eval_u(double x, double t, const SolutionParams& p) {
  return 1.0 / eval_h(x, t, p) - 1.0;
}

std::vector<double> eval_u(const SpaceTimePoint& pt, const SolutionParams& p) {
  const double inv_h = 1.0 / eval_h(pt, p);
  return std::vector<double>(static_cast<std::size_t>(p.n), inv_h - 1.0 / p.n);
}

double eval_hb_euler(double x, double t, const SolutionParams& p) {
  require_inviscid_1d(p);
  return bathymetry(phase(x, t), p.c1, p.g, 0.0);
}

double eval_he_euler(double x, double t, const SolutionParams& p) {
  require_inviscid_1d(p);
  return elevation(phase(x, t), p.c1, p.g, 0.0);
}

double eval_dhb_dx_euler(double x, double t, const SolutionParams& p) {
  return bathymetry_slope(phase(x, t), p.c1, p.g, 0.0);
}

double sine_ratio_primitive(double s, double c1) {
  require_c1(c1);
  const double m = c1 * c1 - 1.0;
  const double jump = kTwoPi / (m * std::sqrt(m));
  const double k = std::nearbyint(s / kTwoPi);
  const double reduced = s - kTwoPi * k;
  double raw = primitive_on_branch(reduced, c1);
  if (!std::isfinite(raw)) {
    // Removable singularity of the representation at the tan pole.
    constexpr double nudge = 1e-9;
    raw = 0.5 * (primitive_on_branch(reduced - nudge, c1) +
                 primitive_on_branch(reduced + nudge, c1));
  }
  return raw + k * jump;
}

double eval_a(double s, double c1) {
  // d/ds [P/2 - cos s/(2h^2)] = cos^2 s / h^3.
  const auto [sn, cs] = sin_cos(s);
  const double h = c1 + sn;
  const double p0 = primitive_on_branch(0.0, c1);
  return 0.5 * (sine_ratio_primitive(s, c1) + p0) - cs / (2.0 * h * h) +
         1.0 / (2.0 * c1 * c1);
}

double eval_a(const SpaceTimePoint& pt, const SolutionParams& p) {
  return eval_a(phase(pt), p.c1);
}

double eddy_primitive_period_increment(double c1) {
  require_c1(c1);
  const double m = c1 * c1 - 1.0;
  return std::numbers::pi / (m * std::sqrt(m));
}

double eval_hb_ns(double x, double t, const SolutionParams& p) {
  require_1d(p);
  return bathymetry(phase(x, t), p.c1, p.g, p.k_h);
}

double eval_he_ns(double x, double t, const SolutionParams& p) {
  require_1d(p);
  return elevation(phase(x, t), p.c1, p.g, p.k_h);
}

double eval_dhb_dx_ns(double x, double t, const SolutionParams& p) {
  return bathymetry_slope(phase(x, t), p.c1, p.g, p.k_h);
}

AnalyticFields eval_ndim_fields(const SpaceTimePoint& pt, const SolutionParams& p) {
  p.validate();
  if (pt.r.size() != static_cast<std::size_t>(p.n)) {
    throw std::invalid_argument("point dimension does not match n");
  }
  const double s = phase(pt);
  const double n = p.n;
  const double sn = std::sin(s);
  const double cs = std::cos(s);
  const double h = p.c1 + sn;
  const double h3 = h * h * h;

  AnalyticFields f;
  f.h = h;
  f.u = eval_u(pt, p);
  f.h_e = n * elevation(s, p.c1, p.g, p.k_h);
  f.h_b = h - f.h_e;
  const double dhe = n * (cs / h3 + p.k_h * (sn * h + cs * cs) / h3) / p.g;
  f.dhb_dr.assign(pt.r.size(), cs - dhe);
  return f;
}

namespace transcribed {

double eval_hb_ns(double x, double t, const SolutionParams& p) {
  require_1d(p);
  const double s = phase(x, t);
  const double h = p.c1 + std::sin(s);
  const double inv_h2 = 1.0 / (h * h);
  return p.c1 + p.k_h / p.g * (sine_ratio_primitive(s, p.c1) + inv_h2) + std::sin(s) +
         inv_h2 / (2.0 * p.g);
}

double eval_he_ns(double x, double t, const SolutionParams& p) {
  require_1d(p);
  const double s = phase(x, t);
  const double h = p.c1 + std::sin(s);
  const double inv_h2 = 1.0 / (h * h);
  return -(inv_h2 / 2.0 + p.k_h * (sine_ratio_primitive(s, p.c1) + inv_h2)) / p.g;
}

AnalyticFields eval_ndim_fields(const SpaceTimePoint& pt, const SolutionParams& p) {
  p.validate();
  if (pt.r.size() != static_cast<std::size_t>(p.n)) {
    throw std::invalid_argument("point dimension does not match n");
  }
  const double s = phase(pt);
  const double n = p.n;
  const double g = p.g;
  const double sn = std::sin(s);
  const double h = p.c1 + sn;
  const double log_h = std::log(std::abs(h));
  const double inv_h2 = 1.0 / (h * h);
  const double viscous = p.k_h / g * (sine_ratio_primitive(s, p.c1) + 0.5 * inv_h2);
  const double inertial = log_h / (g * n * n) + inv_h2 / (2.0 * g);

  AnalyticFields f;
  f.h = h;
  f.u = eval_u(pt, p);
  f.h_b = sn - log_h / g + n * (viscous + inertial);
  f.h_e = log_h / g - n * (viscous - inertial);
  // Gradient line as transcribed, summed over the n identical terms.
  const double cs = std::cos(s);
  const double grad = cs - cs / (g * h) -
                      n * (p.k_h / g * (sn * inv_h2 + cs / (h * h * h)) +
                           (cs / (g * h * n * n) - cs / (g * h * h * h)));
  f.dhb_dr.assign(pt.r.size(), grad);
  return f;
}

}  // namespace transcribed

}  // namespace solitary
