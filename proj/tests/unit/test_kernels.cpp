#include <cstring>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "solitary/kernels.hpp"

using namespace solitary;
using namespace solitary::kernels;

namespace {

struct Fields {
  std::vector<double> u, h, h_e;
};

Fields random_fields(std::size_t n, std::uint64_t seed, bool mixed_sign) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uu(-1.0, mixed_sign ? 1.0 : -0.1);
  std::uniform_real_distribution<double> hh(0.5, 8.0);
  std::uniform_real_distribution<double> ee(-0.5, 0.5);
  Fields f;
  for (std::size_t i = 0; i < n; ++i) {
    f.u.push_back(uu(rng));
    f.h.push_back(hh(rng));
    f.h_e.push_back(ee(rng));
  }
  return f;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

void run(Isa isa, const Fields& f, const StencilCoefficients& c, std::vector<double>& u,
         std::vector<double>& h) {
  u.assign(f.u.size(), -7.0);
  h.assign(f.h.size(), -7.0);
  advance_interior({f.u, f.h, f.h_e}, {u, h}, c, isa);
}

}  // namespace

TEST_CASE("isa names and resolution") {
  CHECK(to_string(Isa::scalar) == "scalar");
  CHECK(to_string(Isa::avx2) == "avx2");
  CHECK(is_supported(Isa::scalar));
  CHECK(resolve(Isa::scalar) == Isa::scalar);
  CHECK(is_supported(detected_isa()));
  if (!is_supported(Isa::avx2)) CHECK(resolve(Isa::avx2) == Isa::scalar);
}

TEST_CASE("scalar stencil on a hand-worked case") {
  // three cells: only the middle one is updated
  Fields f{{-0.5, -0.4, -0.2}, {2.0, 2.5, 3.0}, {0.1, 0.0, -0.1}};
  StencilCoefficients c{0.1, 0.01, 1.0, 0.0, true};
  std::vector<double> u(3, 9.0), h(3, 9.0);
  scalar::advance_interior({f.u, f.h, f.h_e}, {u, h}, c);
  // u < 0: forward difference for the transported quantity
  double du = (-0.2 - -0.4) / 0.1;
  double dhe = (-0.1 - 0.1) / 0.2;
  double dh = (3.0 - 2.5) / 0.1;
  double duc = (-0.2 - -0.5) / 0.2;
  CHECK(u[1] == doctest::Approx(-0.4 + 0.01 * (0.4 * du - dhe)));
  CHECK(h[1] == doctest::Approx(2.5 + 0.01 * (0.4 * dh - 2.5 * duc)));
  CHECK(u[0] == 9.0);
  CHECK(u[2] == 9.0);
}

TEST_CASE("lake at rest is a fixed point") {
  Fields f{std::vector<double>(12, 0.0), std::vector<double>(12, 2.0),
           std::vector<double>(12, 0.3)};
  StencilCoefficients c{0.01, 1e-3, 1.0, 0.5, true};
  std::vector<double> u, h;
  run(Isa::scalar, f, c, u, h);
  for (std::size_t i = 1; i + 1 < 12; ++i) {
    CHECK(u[i] == 0.0);
    CHECK(h[i] == 2.0);
  }
}

TEST_CASE("dispatch rejects mismatched spans") {
  Fields f = random_fields(10, 1, true);
  std::vector<double> u(9), h(10);
  StencilCoefficients c{0.01, 1e-3, 1.0, 0.0, true};
  CHECK_THROWS_AS(advance_interior({f.u, f.h, f.h_e}, {u, h}, c, Isa::scalar),
                  std::invalid_argument);
}

TEST_CASE("SIMD kernels reproduce the scalar reference bit for bit") {
  if (!is_supported(Isa::avx2)) {
    MESSAGE("AVX2 not available, skipping");
    return;
  }
  for (std::size_t n : {3u, 4u, 5u, 6u, 7u, 8u, 9u, 13u, 64u, 1000u, 1001u}) {
    for (bool mixed : {false, true}) {
      for (bool upwind : {true, false}) {
        for (double k : {0.0, 0.3}) {
          Fields f = random_fields(n, 1234 + n, mixed);
          StencilCoefficients c{1e-2, 1e-4, 1.0, k, upwind};
          std::vector<double> us, hs, uv, hv;
          run(Isa::scalar, f, c, us, hs);
          run(Isa::avx2, f, c, uv, hv);
          CAPTURE(n);
          CAPTURE(mixed);
          CAPTURE(upwind);
          CAPTURE(k);
          CHECK(bitwise_equal(us, uv));
          CHECK(bitwise_equal(hs, hv));
        }
      }
    }
  }
}

TEST_CASE("SIMD splitting matches scalar") {
  if (!is_supported(Isa::avx2)) return;
  for (std::size_t n : {1u, 3u, 4u, 11u, 1000u}) {
    Fields f = random_fields(n, 99, true);
    std::vector<double> a(n), b(n);
    split_elevation(f.h, f.h_e, a, Isa::scalar);
    split_elevation(f.h, f.h_e, b, Isa::avx2);
    CHECK(bitwise_equal(a, b));
    for (std::size_t i = 0; i < n; ++i) CHECK(a[i] == f.h[i] - f.h_e[i]);
  }
}

TEST_CASE("upwind direction follows the local sign") {
  // a positive-velocity state must take the backward difference
  Fields f{{0.5, 0.5, 0.5}, {1.0, 2.0, 5.0}, {0.0, 0.0, 0.0}};
  StencilCoefficients c{0.1, 0.01, 1.0, 0.0, true};
  std::vector<double> u, h;
  run(Isa::scalar, f, c, u, h);
  CHECK(h[1] == doctest::Approx(2.0 - 0.01 * 0.5 * (2.0 - 1.0) / 0.1));
}
