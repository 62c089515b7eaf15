#include "qpol/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qpol {

double Sampler::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

double Sampler::normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

int Sampler::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

TwoModeState Sampler::pure_state(int cutoff) {
  TwoModeState::AmplitudeMap map;
  for (int n = 0; n <= cutoff; ++n) {
    for (int k = 0; k <= n; ++k) map.emplace(FockIndex{n, k}, Complex{normal(), normal()});
  }
  return TwoModeState(std::move(map));
}

TwoModeState Sampler::manifold_state(int n) {
  CVector c(n + 1);
  for (int k = 0; k <= n; ++k) c(k) = Complex{normal(), normal()};
  return TwoModeState::from_manifold(n, c);
}

CMatrix Sampler::mixed_block(int n) {
  const int rank = integer(1, n + 1);
  CMatrix g(n + 1, rank);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j < rank; ++j) g(i, j) = Complex{normal(), normal()};
  }
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

BlockDensity Sampler::block_density(int cutoff) { return block_density(cutoff, integer(1, cutoff + 1)); }

BlockDensity Sampler::block_density(int cutoff, int manifolds) {
  std::vector<int> pool(static_cast<std::size_t>(cutoff) + 1);
  std::iota(pool.begin(), pool.end(), 0);
  std::shuffle(pool.begin(), pool.end(), engine_);
  pool.resize(static_cast<std::size_t>(std::clamp(manifolds, 1, cutoff + 1)));
  std::vector<Block> blocks;
  for (int n : pool) blocks.push_back({n, -std::log(uniform(1e-12, 1.0)), mixed_block(n)});
  return BlockDensity::renormalized(std::move(blocks));
}

BlockDensity Sampler::pure_block_density(int cutoff) {
  std::vector<Block> blocks;
  for (int n = 0; n <= cutoff; ++n) {
    if (uniform() < 0.5 && !(n == cutoff && blocks.empty())) continue;
    const CVector v = manifold_state(n).manifold(n);
    blocks.push_back({n, -std::log(uniform(1e-12, 1.0)), v * v.adjoint()});
  }
  return BlockDensity::renormalized(std::move(blocks));
}

UnpolarizedSpec Sampler::unpolarized_spec(int cutoff) {
  UnpolarizedSpec spec;
  double total = 0.0;
  for (int n = 0; n <= cutoff; ++n) {
    if (uniform() < 0.4 && !(n == cutoff && spec.weights.empty())) continue;
    const double w = -std::log(uniform(1e-12, 1.0));
    spec.weights[n] = w;
    total += w;
  }
  for (auto& entry : spec.weights) entry.second /= total;
  return spec;
}

EulerAngles Sampler::angles() { return {uniform(0.0, 2.0 * kPi), uniform(0.0, kPi), uniform(0.0, 2.0 * kPi)}; }

SphereDirection Sampler::direction() { return {std::acos(uniform(-1.0, 1.0)), uniform(0.0, 2.0 * kPi)}; }

SailPoint Sampler::sail_point() {
  for (;;) {
    const double a0 = uniform(0.0, 1.0 / std::sqrt(2.0));
    const double a2 = uniform(0.0, std::sqrt(3.0) / 2.0);
    if (sail_region(a0, a2).zone == SailZone::inside) return {a0, a2, uniform(0.0, 2.0 * kPi)};
  }
}

TwoModeState Sampler::unpolarized_pure(int n) {
  if (n == 2) return two_photon_family(uniform(0.0, 1.0 / std::sqrt(2.0)), uniform(0.0, 2.0 * kPi));
  if (n == 3) {
    const auto states = three_photon_solve(sail_point());
    return states[static_cast<std::size_t>(integer(0, static_cast<int>(states.size()) - 1))];
  }
  std::vector<Complex> half(static_cast<std::size_t>(n / 2) + 1);
  for (auto& c : half) c = Complex{normal(), normal()};
  return symmetric_family(n, half, uniform() < 0.5 ? FamilySign::upper : FamilySign::lower);
}

}  // namespace qpol
