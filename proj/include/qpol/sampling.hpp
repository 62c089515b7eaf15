#pragma once

#include <cstdint>
#include <random>

#include "qpol/qmeasures.hpp"
#include "qpol/states.hpp"
#include "qpol/su2.hpp"
#include "qpol/unpolarized.hpp"

namespace qpol {

/// Seeded generator of random states and parameters for property checks.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0);
  double normal();
  int integer(int lo, int hi);  // inclusive

  /// Gaussian amplitudes on every basis ket up to the cutoff.
  TwoModeState pure_state(int cutoff);
  /// Gaussian amplitudes inside one manifold.
  TwoModeState manifold_state(int n);
  /// Random weights on a random nonempty subset of manifolds up to the cutoff,
  /// each block a random mixed state of random rank.
  BlockDensity block_density(int cutoff);
  /// Same, with a fixed number of occupied manifolds chosen from [0, cutoff].
  BlockDensity block_density(int cutoff, int manifolds);
  /// Random pure blocks (rank one) on a random subset of manifolds.
  BlockDensity pure_block_density(int cutoff);

  UnpolarizedSpec unpolarized_spec(int cutoff);
  EulerAngles angles();
  /// Uniform direction on the sphere.
  SphereDirection direction();

  /// Uniform point of the admissible three-photon region (strict interior).
  SailPoint sail_point();
  /// Stokes-unpolarized pure state in manifold n (n = 0 or n >= 2) drawn from
  /// the two-photon family, the three-photon solver or the symmetric family.
  TwoModeState unpolarized_pure(int n);

  std::mt19937_64& engine() { return engine_; }

 private:
  CMatrix mixed_block(int n);
  std::mt19937_64 engine_;
};

}  // namespace qpol
