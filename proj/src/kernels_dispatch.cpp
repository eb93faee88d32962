#include "solitary/kernels.hpp"

#include <stdexcept>

namespace solitary::kernels {

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool is_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(SOLITARY_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() {
  static const Isa best = is_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
  return best;
}

Isa resolve(Isa requested) { return is_supported(requested) ? requested : Isa::scalar; }

void advance_interior(const StencilInput& in, const StencilOutput& out,
                      const StencilCoefficients& c, Isa isa) {
  const std::size_t n = in.u.size();
  if (in.h.size() != n || in.h_e.size() != n || out.u.size() != n || out.h.size() != n) {
    throw std::invalid_argument("advance_interior: array length mismatch");
  }
#if defined(SOLITARY_HAVE_AVX2)
  if (isa == Isa::avx2 && is_supported(Isa::avx2)) {
    avx2::advance_interior(in, out, c);
    return;
  }
#endif
  (void)isa;
  scalar::advance_interior(in, out, c);
}

void split_elevation(std::span<const double> h, std::span<const double> h_b,
                     std::span<double> h_e, Isa isa) {
  if (h_b.size() != h.size() || h_e.size() != h.size()) {
    throw std::invalid_argument("split_elevation: array length mismatch");
  }
#if defined(SOLITARY_HAVE_AVX2)
  if (isa == Isa::avx2 && is_supported(Isa::avx2)) {
    avx2::split_elevation(h, h_b, h_e);
    return;
  }
#endif
  (void)isa;
  scalar::split_elevation(h, h_b, h_e);
}

}  // namespace solitary::kernels
