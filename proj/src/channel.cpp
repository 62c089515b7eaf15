#include "qpol/channel.hpp"

#include <cmath>

namespace qpol {

BlockDensity block_diagonalize(const TwoModeState& state) { return pure_to_block(state); }

BlockDensity block_diagonalize(const BlockDensity& state) { return state; }

BlockDensity block_diagonalize(const AnyState& state) {
  return std::visit([](const auto& s) { return block_diagonalize(s); }, state);
}

std::vector<std::pair<int, double>> photon_distribution(const TwoModeState& state) {
  std::vector<std::pair<int, double>> out;
  for (int n : state.occupied_manifolds()) out.emplace_back(n, state.manifold(n).squaredNorm());
  return out;
}

std::vector<std::pair<int, double>> photon_distribution(const BlockDensity& state) {
  std::vector<std::pair<int, double>> out;
  for (const Block& block : state.blocks()) out.emplace_back(block.n, block.p);
  return out;
}

double mean_photon_number(const BlockDensity& state) {
  double total = 0.0;
  for (const Block& block : state.blocks()) total += block.p * block.n;
  return total;
}

double rescale_unbounded(double value) {
  if (std::isinf(value)) return 1.0;
  return value / (1.0 + value);
}

}  // namespace qpol
