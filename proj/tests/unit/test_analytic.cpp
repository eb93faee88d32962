#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "solitary/analytic.hpp"

using namespace solitary;
using doctest::Approx;

namespace {

constexpr double pi = std::numbers::pi;

SolutionParams params(double c1, double k_h = 0.0, int n = 1) {
  SolutionParams p;
  p.c1 = c1;
  p.k_h = k_h;
  p.n = n;
  return p;
}

// Reference values of int_0^s cos^2/(c1+sin)^3 from adaptive quadrature at 30 digits.
struct QuadRef {
  double c1, s, value;
};
constexpr QuadRef kQuadRefs[] = {
    {2.0, 0.1, 0.011584722850535088},
    {2.0, pi, 0.11819992935935754},
    {2.0, 3 * pi + 1e-4, 0.72281221837495099},
    {4.0, 2 * pi, 0.054077049012981492},
    {7.0, 10.0, 0.015007660000280746},
};

}  // namespace

TEST_CASE("phase sums coordinates and time") {
  CHECK(phase(0.0, 0.0) == 0.0);
  CHECK(phase(pi / 2, 0.0) == pi / 2);
  CHECK(phase(SpaceTimePoint{{1.0, 2.0}, 3.0}) == 6.0);
}

TEST_CASE("free surface elevation") {
  CHECK(eval_h(0.0, 0.0, params(2)) == 2.0);
  CHECK(eval_h(pi / 2, 0.0, params(2)) == 3.0);
  CHECK(eval_h(0.0, 3 * pi / 2, params(7)) == Approx(6.0).epsilon(1e-15));
}

TEST_CASE("velocity") {
  CHECK(eval_u(0.0, 0.0, params(2)) == -0.5);
  CHECK(eval_u(pi / 2, 0.0, params(2)) == Approx(-2.0 / 3.0).epsilon(1e-15));
  auto u = eval_u(SpaceTimePoint{{0.0, 0.0}, 0.0}, params(2, 0, 2));
  REQUIRE(u.size() == 2);
  CHECK(u[0] == 0.0);
  CHECK(u[1] == 0.0);
  // n = 1 vector form matches the scalar one
  auto u1 = eval_u(SpaceTimePoint{{0.3}, 1.7}, params(3));
  CHECK(u1[0] == eval_u(0.3, 1.7, params(3)));
}

TEST_CASE("Euler bathymetry and elevation") {
  CHECK(eval_hb_euler(0, 0, params(2)) == 2.125);
  CHECK(eval_hb_euler(pi / 2, 0, params(2)) == Approx(3.0 + 1.0 / 18));
  CHECK(eval_hb_euler(0, 0, params(4)) == 4.03125);
  CHECK(eval_he_euler(0, 0, params(2)) == -0.125);
  CHECK(eval_he_euler(pi / 2, 0, params(2)) == Approx(-1.0 / 18));
  for (double x : {-3.0, 0.1, 2.5, 9.9}) {
    auto p = params(2.5);
    CHECK(eval_h(x, 1.3, p) - eval_hb_euler(x, 1.3, p) ==
          Approx(eval_he_euler(x, 1.3, p)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(eval_hb_euler(0, 0, params(2, 0.3)), std::invalid_argument);
  CHECK_THROWS_AS(eval_he_euler(0, 0, params(2, 0.3)), std::invalid_argument);
}

TEST_CASE("Euler bathymetry slope") {
  CHECK(eval_dhb_dx_euler(0, 0, params(2)) == 0.875);
  CHECK(std::abs(eval_dhb_dx_euler(pi / 2, 0, params(2))) < 1e-15);
  CHECK(eval_dhb_dx_euler(pi, 0, params(2)) == Approx(-0.875).epsilon(1e-14));
  // against a central difference of the closed form
  auto p = params(4);
  for (double x = -5; x < 5; x += 0.37) {
    const double e = 1e-5;
    double fd = (eval_hb_euler(x + e, 0.4, p) - eval_hb_euler(x - e, 0.4, p)) / (2 * e);
    CHECK(eval_dhb_dx_euler(x, 0.4, p) == Approx(fd).epsilon(1e-8));
  }
}

TEST_CASE("Euler fields are 2 pi periodic in phase") {
  auto p = params(2);
  for (double s = 0; s < 6; s += 0.5) {
    CHECK(eval_hb_euler(s + 2 * pi, 0, p) == Approx(eval_hb_euler(s, 0, p)).epsilon(1e-13));
    CHECK(eval_he_euler(s + 2 * pi, 0, p) == Approx(eval_he_euler(s, 0, p)).epsilon(1e-13));
  }
}

TEST_CASE("eddy primitive value at zero") {
  const double expected = 2.0 / 3.0 + pi / (9.0 * std::sqrt(3.0));
  CHECK(eval_a(0.0, 2.0) == Approx(expected).epsilon(1e-15));
  CHECK(eval_a(0.0, 2.0) == Approx(0.8682000).epsilon(1e-7));
}

TEST_CASE("eddy primitive matches quadrature") {
  for (const auto& ref : kQuadRefs) {
    CAPTURE(ref.c1);
    CAPTURE(ref.s);
    CHECK(eval_a(ref.s, ref.c1) - eval_a(0.0, ref.c1) == Approx(ref.value).epsilon(1e-12));
  }
}

TEST_CASE("eddy primitive derivative on a dense phase grid") {
  for (double c1 : {1.5, 2.0, 4.0, 7.0}) {
    double worst = 0;
    const int count = 4000;
    for (int i = 0; i < count; ++i) {
      double s = 4 * pi * (i + 0.5) / count;
      const double e = 1e-5;
      double fd = (eval_a(s + e, c1) - eval_a(s - e, c1)) / (2 * e);
      double h = c1 + std::sin(s);
      double exact = std::cos(s) * std::cos(s) / (h * h * h);
      worst = std::max(worst, std::abs(fd - exact));
    }
    CAPTURE(c1);
    CHECK(worst < 1e-8);
  }
}

TEST_CASE("eddy primitive is continuous across the tangent poles") {
  for (double c1 : {2.0, 5.0}) {
    for (double pole : {pi, 3 * pi, -pi, 11 * pi}) {
      double left = eval_a(pole - 1e-9, c1);
      double right = eval_a(pole + 1e-9, c1);
      CHECK(std::abs(right - left) < 1e-8);
      CHECK(std::isfinite(eval_a(pole, c1)));
    }
  }
}

TEST_CASE("eddy primitive period increment") {
  for (double c1 : {2.0, 4.0, 7.0}) {
    double inc = eddy_primitive_period_increment(c1);
    CHECK(inc == Approx(pi * std::pow(c1 * c1 - 1, -1.5)).epsilon(1e-15));
    for (double s : {0.0, 1.0, 3.0, -2.0}) {
      CHECK(eval_a(s + 2 * pi, c1) - eval_a(s, c1) == Approx(inc).epsilon(1e-12));
    }
  }
  CHECK(eddy_primitive_period_increment(2.0) == Approx(0.60459978807807264).epsilon(1e-14));
}

TEST_CASE("sine ratio primitive derivative") {
  for (double s = -7; s < 7; s += 0.13) {
    const double e = 1e-6;
    double fd = (sine_ratio_primitive(s + e, 3.0) - sine_ratio_primitive(s - e, 3.0)) / (2 * e);
    double h = 3.0 + std::sin(s);
    CHECK(fd == Approx(-std::sin(s) / (h * h)).epsilon(1e-7).scale(1));
  }
  CHECK_THROWS_AS(sine_ratio_primitive(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(eval_a(0.0, 0.5), std::invalid_argument);
}

TEST_CASE("Navier-Stokes forms reduce to Euler at zero viscosity") {
  auto p = params(3);
  for (double x = -4; x < 4; x += 0.29) {
    for (double t : {0.0, 2.5, 9.0}) {
      CHECK(eval_hb_ns(x, t, p) == eval_hb_euler(x, t, p));
      CHECK(eval_he_ns(x, t, p) == eval_he_euler(x, t, p));
      CHECK(eval_dhb_dx_ns(x, t, p) == eval_dhb_dx_euler(x, t, p));
    }
  }
}

TEST_CASE("Navier-Stokes examples") {
  const double a0 = 2.0 / 3.0 + pi / (9.0 * std::sqrt(3.0));
  CHECK(eval_hb_ns(0, 0, params(2, 1.0)) == Approx(2.125 + a0 + 0.25).epsilon(1e-14));
  CHECK(eval_hb_ns(0, 0, params(2, 1.0)) == Approx(3.243200).epsilon(1e-7));
  CHECK(eval_he_ns(0, 0, params(2, 0.3)) == Approx(-(0.125 + 0.3 * (a0 + 0.25))).epsilon(1e-14));
  CHECK(eval_he_ns(0, 0, params(2, 0.3)) == Approx(-0.460460).epsilon(1e-6));
  // cos - cos/h^3 - k (sin h + cos^2)/h^3 at s = 0
  CHECK(eval_dhb_dx_ns(0, 0, params(2, 1.0)) == Approx(0.75).epsilon(1e-15));
}

TEST_CASE("Navier-Stokes splitting and gradient") {
  for (double k : {0.3, 1.0}) {
    auto p = params(2, k);
    for (double x = -6; x < 6; x += 0.41) {
      double t = 1.1;
      CHECK(eval_he_ns(x, t, p) + eval_hb_ns(x, t, p) - eval_h(x, t, p) ==
            Approx(0).scale(1).epsilon(1e-14));
      const double e = 1e-5;
      double fd = (eval_hb_ns(x + e, t, p) - eval_hb_ns(x - e, t, p)) / (2 * e);
      CHECK(eval_dhb_dx_ns(x, t, p) == Approx(fd).epsilon(1e-8).scale(1));
    }
  }
}

TEST_CASE("Navier-Stokes bathymetry drifts by the eddy increment per period") {
  auto p = params(5, 1.0);
  double drift = eval_hb_ns(0.7 + 2 * pi, 0, p) - eval_hb_ns(0.7, 0, p);
  CHECK(drift == Approx(p.k_h / p.g * eddy_primitive_period_increment(5)).epsilon(1e-10));
  // the slope, in contrast, is periodic
  CHECK(eval_dhb_dx_ns(0.7 + 2 * pi, 0, p) == Approx(eval_dhb_dx_ns(0.7, 0, p)).epsilon(1e-13));
}

TEST_CASE("transcribed forms differ from the corrected ones") {
  auto p = params(2, 1.0);
  CHECK(transcribed::eval_hb_ns(0.4, 0, p) != Approx(eval_hb_ns(0.4, 0, p)));
  auto q = params(2, 0.0);
  CHECK(transcribed::eval_hb_ns(0.4, 0, q) == Approx(eval_hb_ns(0.4, 0, q)).epsilon(1e-14));
}

TEST_CASE("n-dimensional fields") {
  SpaceTimePoint pt{{0.2, -0.5}, 1.0};
  auto p = params(2, 0.3, 2);
  auto f = eval_ndim_fields(pt, p);
  REQUIRE(f.u.size() == 2);
  REQUIRE(f.dhb_dr.size() == 2);
  CHECK(f.h == Approx(2 + std::sin(0.7)));
  CHECK(f.u[0] == Approx(1 / f.h - 0.5));
  CHECK(f.h_e + f.h_b == Approx(f.h).epsilon(1e-14));
  CHECK(f.dhb_dr[0] == f.dhb_dr[1]);

  // n = 1 reproduces the 1D Navier-Stokes forms
  auto p1 = params(3, 0.3, 1);
  auto f1 = eval_ndim_fields(SpaceTimePoint{{0.9}, 2.0}, p1);
  CHECK(f1.u[0] == Approx(eval_u(0.9, 2.0, p1)));
  CHECK(f1.h_b == Approx(eval_hb_ns(0.9, 2.0, p1)).epsilon(1e-14));
  CHECK(f1.dhb_dr[0] == Approx(eval_dhb_dx_ns(0.9, 2.0, p1)).epsilon(1e-14));

  CHECK_THROWS_AS(eval_ndim_fields(SpaceTimePoint{{0.0}, 0.0}, params(2, 0, 2)),
                  std::invalid_argument);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(params(1.0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(params(0.5).validate(), std::invalid_argument);
  CHECK_THROWS_AS(params(2, -0.1).validate(), std::invalid_argument);
  CHECK_THROWS_AS(params(2, 0, 0).validate(), std::invalid_argument);
  SolutionParams bad_g = params(2);
  bad_g.g = 0;
  CHECK_THROWS_AS(bad_g.validate(), std::invalid_argument);
  CHECK_NOTHROW(params(2).validate());
}
