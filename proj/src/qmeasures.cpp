#include "qpol/qmeasures.hpp"

#include <algorithm>
#include <cmath>

#include "qpol/channel.hpp"
#include "qpol/kernels.hpp"

namespace qpol {

namespace {

constexpr double kFourPi = 4.0 * kPi;

// Real parts sqrt(C(n,k)) cos^k(theta/2) sin^{n-k}(theta/2) of the coherent amplitudes.
std::vector<double> coherent_moduli(int n, double cos_half, double sin_half) {
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const double log_binomial = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
    out[k] = std::exp(0.5 * log_binomial) * std::pow(cos_half, k) * std::pow(sin_half, n - k);
  }
  return out;
}

}  // namespace

CVector coherent_amplitudes(int n, const SphereDirection& omega) {
  if (n < 0) throw IndexError("negative manifold");
  const auto moduli = coherent_moduli(n, std::cos(omega.theta / 2.0), std::sin(omega.theta / 2.0));
  CVector out(n + 1);
  for (int k = 0; k <= n; ++k) out(k) = std::polar(moduli[k], k * omega.phi);
  return out;
}

TwoModeState su2_coherent(int n, const SphereDirection& omega) {
  return TwoModeState::from_manifold(n, coherent_amplitudes(n, omega));
}

double q_function(const BlockDensity& state, const SphereDirection& omega) {
  double total = 0.0;
  for (const Block& block : state.blocks()) {
    const CVector v = coherent_amplitudes(block.n, omega);
    total += block.p * (block.n + 1.0) / kFourPi * v.dot(block.rho * v).real();
  }
  return std::max(0.0, total);
}

double q_function(const TwoModeState& state, const SphereDirection& omega) {
  return q_function(block_diagonalize(state), omega);
}

QIntegrals q_integrals(const BlockDensity& state) { return q_integrals(state, SphereGrid(state.cutoff())); }

QIntegrals q_integrals(const BlockDensity& state, const SphereGrid& grid) {
  const int degree = state.cutoff();
  const int width = grid.azimuthal_nodes();
  std::vector<double> cos_table(static_cast<std::size_t>((degree + 1) * width));
  std::vector<double> sin_table(cos_table.size());
  for (int d = 0; d <= degree; ++d) {
    for (int j = 0; j < width; ++j) {
      cos_table[d * width + j] = std::cos(d * grid.phi()[j]);
      sin_table[d * width + j] = std::sin(d * grid.phi()[j]);
    }
  }
  const kernels::TrigTable table{static_cast<std::size_t>(degree), static_cast<std::size_t>(width), cos_table,
                                 sin_table};

  QIntegrals out;
  std::vector<double> cos_coef(static_cast<std::size_t>(degree) + 1);
  std::vector<double> sin_coef(cos_coef.size());
  for (int i = 0; i < grid.polar_nodes(); ++i) {
    const double x = grid.cos_theta()[i];
    const double cos_half = std::sqrt(std::max(0.0, (1.0 + x) / 2.0));
    const double sin_half = std::sqrt(std::max(0.0, (1.0 - x) / 2.0));
    // Q(theta, phi) = sum_d C_d(theta) e^{i d phi} + c.c. (d > 0)
    std::vector<Complex> harmonic(cos_coef.size());
    for (const Block& block : state.blocks()) {
      const auto beta = coherent_moduli(block.n, cos_half, sin_half);
      const double scale = block.p * (block.n + 1.0) / kFourPi;
      for (int d = 0; d <= block.n; ++d) {
        Complex sum{};
        for (int k = 0; k + d <= block.n; ++k) sum += beta[k] * beta[k + d] * block.rho(k, k + d);
        harmonic[d] += scale * sum;
      }
    }
    cos_coef[0] = harmonic[0].real();
    sin_coef[0] = 0.0;
    for (int d = 1; d <= degree; ++d) {
      cos_coef[d] = 2.0 * harmonic[d].real();
      sin_coef[d] = -2.0 * harmonic[d].imag();
    }
    const auto row = kernels::series_moments(cos_coef, sin_coef, table);
    const double weight = grid.polar_weights()[i] * grid.azimuthal_weight();
    out.integral += weight * row.sum;
    out.squared_integral += weight * row.sum_squares;
  }
  return out;
}

double dispersion_q(const BlockDensity& state) {
  return std::max(0.0, kFourPi * q_integrals(state).squared_integral - 1.0);
}

double dispersion_q(const TwoModeState& state) { return dispersion_q(block_diagonalize(state)); }

double degree_q(const BlockDensity& state) { return rescale_unbounded(dispersion_q(state)); }
double degree_q(const TwoModeState& state) { return degree_q(block_diagonalize(state)); }

DistinguishabilityResult distinguishability(const BlockDensity& state, PdNormalization mode, const SeedGrid& seeds) {
  std::vector<Block> blocks = state.blocks();
  if (mode == PdNormalization::purity) {
    // Tr(r U r U^dagger) with r = rho / sqrt(Tr rho^2) is the purity-normalized overlap.
    for (Block& block : blocks) block.rho /= std::sqrt(block.rho.squaredNorm());
  }
  const OverlapSearch search = min_overlap_search(blocks, seeds);
  DistinguishabilityResult out;
  out.overlap = search.overlap;
  out.angles = search.angles;
  out.evaluations = search.evaluations;

  // 1 - sum p Tr(r U r U^dagger) = (1 - sum p Tr r^2) + sum p |r - U r U^dagger|^2 / 2 avoids the
  // cancellation of 1 - overlap when the overlap is close to one.
  double deficit = 0.0;
  if (mode == PdNormalization::raw) {
    deficit = 1.0;
    for (const Block& block : blocks) deficit -= block.p * block.rho.squaredNorm();
  }
  for (const Block& block : blocks) {
    const CMatrix u = rotation_matrix(block.n, search.angles);
    deficit += 0.5 * block.p * (block.rho - u * block.rho * u.adjoint()).squaredNorm();
  }
  out.value = std::sqrt(std::clamp(deficit, 0.0, 1.0));
  return out;
}

double degree_d(const BlockDensity& state, PdNormalization mode) { return distinguishability(state, mode).value; }
double degree_d(const TwoModeState& state, PdNormalization mode) { return degree_d(block_diagonalize(state), mode); }

double degree_p(const BlockDensity& state) {
  double total = 0.0;
  for (const Block& block : state.blocks()) {
    if (block.n == 0) continue;
    total += block.p * ((block.n + 1.0) * block.rho.squaredNorm() - 1.0) / block.n;
  }
  return std::clamp(total, 0.0, 1.0);
}

double degree_p(const TwoModeState& state) { return degree_p(block_diagonalize(state)); }

BlockDensity adjacent_coherent_mixture(double nbar) {
  if (!(nbar >= 0.0)) throw InvalidState("mean photon number must be non-negative");
  const int hi = static_cast<int>(std::ceil(nbar));
  std::vector<Block> blocks;
  auto north_pole = [](int n) {
    CMatrix rho = CMatrix::Zero(n + 1, n + 1);
    rho(n, n) = 1.0;  // |n;0> = |n,0>
    return rho;
  };
  if (hi >= 1 && hi - nbar > 0.0) blocks.push_back({hi - 1, hi - nbar, north_pole(hi - 1)});
  blocks.push_back({hi, 1.0 + nbar - hi, north_pole(hi)});
  return BlockDensity(std::move(blocks));
}

double max_q(double nbar) { return degree_q(adjacent_coherent_mixture(nbar)); }
double max_d(double nbar) { return std::sqrt(std::clamp(nbar, 0.0, 1.0)); }
double max_p(double nbar) { return std::clamp(nbar, 0.0, 1.0); }

namespace {

template <class F>
std::vector<MaxCurvePoint> sweep(const std::vector<double>& grid, const char* tag, F&& f) {
  std::vector<MaxCurvePoint> out;
  out.reserve(grid.size());
  for (double nbar : grid) out.push_back({nbar, f(nbar), tag});
  return out;
}

}  // namespace

std::vector<MaxCurvePoint> max_curve_q(const std::vector<double>& grid) { return sweep(grid, "q", max_q); }
std::vector<MaxCurvePoint> max_curve_d(const std::vector<double>& grid) { return sweep(grid, "d", max_d); }
std::vector<MaxCurvePoint> max_curve_p(const std::vector<double>& grid) { return sweep(grid, "p", max_p); }

}  // namespace qpol
