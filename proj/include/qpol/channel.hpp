#pragma once

#include <utility>
#include <vector>

#include "qpol/states.hpp"

namespace qpol {

/// Non-selective photon-number measurement: removes every coherence between
/// different manifolds. Identity on block densities.
BlockDensity block_diagonalize(const TwoModeState& state);
BlockDensity block_diagonalize(const BlockDensity& state);
BlockDensity block_diagonalize(const AnyState& state);

/// (N, p_N) pairs, ascending in N, zero-weight manifolds omitted.
std::vector<std::pair<int, double>> photon_distribution(const TwoModeState& state);
std::vector<std::pair<int, double>> photon_distribution(const BlockDensity& state);

/// Mean photon number sum_N N p_N.
double mean_photon_number(const BlockDensity& state);

/// Order-preserving map of [0, inf) onto [0, 1): x / (1 + x).
double rescale_unbounded(double value);

}  // namespace qpol
