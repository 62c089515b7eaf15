#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference version and,
// on x86-64, an AVX2+FMA version picked at runtime from CPUID. The scalar
// versions are the definition; the vector versions must agree with them to
// rounding.

#include <cstddef>
#include <span>
#include <string_view>

namespace qpol::kernels {

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend backend);

/// True when the running CPU can execute the given backend.
bool backend_supported(Backend backend);

/// Backend used by the dispatching entry points. Defaults to the best
/// supported one; QPOL_KERNELS=scalar in the environment forces scalar.
Backend active_backend();

/// Overrides the dispatch choice (tests and benchmarks). Unsupported requests
/// fall back to scalar.
void set_active_backend(Backend backend);

/// Cosine/sine table of a truncated Fourier series sampled on a uniform
/// azimuthal grid: cos(d*phi_j) at cos_table[d*width + j], likewise sin.
struct TrigTable {
  std::size_t degree = 0;  // highest harmonic d
  std::size_t width = 0;   // number of samples j
  std::span<const double> cos_table;
  std::span<const double> sin_table;
};

/// Sum and sum of squares of q_j = sum_d cos_coef[d] cos(d phi_j) + sin_coef[d] sin(d phi_j).
struct SeriesMoments {
  double sum = 0.0;
  double sum_squares = 0.0;
};

/// Plain dot product of two equally sized arrays.
double dot(std::span<const double> a, std::span<const double> b);

SeriesMoments series_moments(std::span<const double> cos_coef, std::span<const double> sin_coef, const TrigTable& table);

namespace scalar {
double dot(const double* a, const double* b, std::size_t count);
SeriesMoments series_moments(const double* cos_coef, const double* sin_coef, const TrigTable& table);
}  // namespace scalar

namespace avx2 {
double dot(const double* a, const double* b, std::size_t count);
SeriesMoments series_moments(const double* cos_coef, const double* sin_coef, const TrigTable& table);
}  // namespace avx2

}  // namespace qpol::kernels
