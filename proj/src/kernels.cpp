#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "qpol/kernels.hpp"

namespace qpol::kernels {

namespace {

Backend detect_backend() {
  if (const char* forced = std::getenv("QPOL_KERNELS"); forced != nullptr && std::string_view(forced) == "scalar") {
    return Backend::scalar;
  }
  return backend_supported(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& backend_slot() {
  static std::atomic<Backend> slot{detect_backend()};
  return slot;
}

}  // namespace

std::string_view backend_name(Backend backend) { return backend == Backend::avx2 ? "avx2" : "scalar"; }

bool backend_supported(Backend backend) {
  if (backend == Backend::scalar) return true;
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend active_backend() { return backend_slot().load(std::memory_order_relaxed); }

void set_active_backend(Backend backend) {
  backend_slot().store(backend_supported(backend) ? backend : Backend::scalar, std::memory_order_relaxed);
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  return active_backend() == Backend::avx2 ? avx2::dot(a.data(), b.data(), a.size())
                                           : scalar::dot(a.data(), b.data(), a.size());
}

SeriesMoments series_moments(std::span<const double> cos_coef, std::span<const double> sin_coef, const TrigTable& table) {
  const std::size_t terms = table.degree + 1;
  if (cos_coef.size() < terms || sin_coef.size() < terms) throw std::invalid_argument("series_moments: too few coefficients");
  if (table.cos_table.size() < terms * table.width || table.sin_table.size() < terms * table.width) {
    throw std::invalid_argument("series_moments: table too small");
  }
  return active_backend() == Backend::avx2 ? avx2::series_moments(cos_coef.data(), sin_coef.data(), table)
                                           : scalar::series_moments(cos_coef.data(), sin_coef.data(), table);
}

}  // namespace qpol::kernels
