#include "qpol/kernels.hpp"

namespace qpol::kernels::scalar {

double dot(const double* a, const double* b, std::size_t count) {
  double acc = 0.0;
  for (std::size_t i = 0; i < count; ++i) acc += a[i] * b[i];
  return acc;
}

SeriesMoments series_moments(const double* cos_coef, const double* sin_coef, const TrigTable& table) {
  SeriesMoments out;
  for (std::size_t j = 0; j < table.width; ++j) {
    double q = 0.0;
    for (std::size_t d = 0; d <= table.degree; ++d) {
      const std::size_t at = d * table.width + j;
      q += cos_coef[d] * table.cos_table[at] + sin_coef[d] * table.sin_table[at];
    }
    out.sum += q;
    out.sum_squares += q * q;
  }
  return out;
}

}  // namespace qpol::kernels::scalar
