#include "qpol/kernels.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define QPOL_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#endif

namespace qpol::kernels::avx2 {

#if QPOL_HAVE_AVX2_KERNELS

namespace {

__attribute__((target("avx2,fma"))) inline double horizontal_sum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

}  // namespace

__attribute__((target("avx2,fma"))) double dot(const double* a, const double* b, std::size_t count) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= count; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= count; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  double acc = horizontal_sum(_mm256_add_pd(acc0, acc1));
  for (; i < count; ++i) acc += a[i] * b[i];
  return acc;
}

__attribute__((target("avx2,fma"))) SeriesMoments series_moments(const double* cos_coef, const double* sin_coef,
                                                                 const TrigTable& table) {
  const double* cos_table = table.cos_table.data();
  const double* sin_table = table.sin_table.data();
  const std::size_t width = table.width;

  __m256d sum = _mm256_setzero_pd();
  __m256d sum_squares = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= width; j += 4) {
    __m256d q = _mm256_setzero_pd();
    for (std::size_t d = 0; d <= table.degree; ++d) {
      const std::size_t at = d * width + j;
      q = _mm256_fmadd_pd(_mm256_set1_pd(cos_coef[d]), _mm256_loadu_pd(cos_table + at), q);
      q = _mm256_fmadd_pd(_mm256_set1_pd(sin_coef[d]), _mm256_loadu_pd(sin_table + at), q);
    }
    sum = _mm256_add_pd(sum, q);
    sum_squares = _mm256_fmadd_pd(q, q, sum_squares);
  }

  SeriesMoments out{horizontal_sum(sum), horizontal_sum(sum_squares)};
  for (; j < width; ++j) {
    double q = 0.0;
    for (std::size_t d = 0; d <= table.degree; ++d) {
      const std::size_t at = d * width + j;
      q += cos_coef[d] * cos_table[at] + sin_coef[d] * sin_table[at];
    }
    out.sum += q;
    out.sum_squares += q * q;
  }
  return out;
}

#else

// Non-x86 builds never select this backend; keep the symbols linkable.
double dot(const double* a, const double* b, std::size_t count) { return scalar::dot(a, b, count); }

SeriesMoments series_moments(const double* cos_coef, const double* sin_coef, const TrigTable& table) {
  return scalar::series_moments(cos_coef, sin_coef, table);
}

#endif

}  // namespace qpol::kernels::avx2
