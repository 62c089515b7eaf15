#pragma once

#include <array>

#include "qpol/states.hpp"

namespace qpol {

/// Stokes operators restricted to manifold n, in the basis |k, n-k> with k
/// ascending. Sy also carries its eigendecomposition (used for rotations).
struct StokesSet {
  int n = 0;
  CMatrix s0, sx, sy, sz;
  RVector sy_eigenvalues;
  CMatrix sy_eigenvectors;  // columns; sy = V diag(lambda) V^dagger
};

/// Cached, immutable operator set for manifold n (thread-safe lookup).
const StokesSet& stokes_matrices(int n);

struct StokesMoments {
  double s0 = 0.0;
  std::array<double, 3> vec{};  // <Sx>, <Sy>, <Sz>
  std::array<double, 3> var{};  // variances of Sx, Sy, Sz
};

/// Moments of the whole state. Cross-manifold coherences of a pure state do
/// not contribute since every Stokes operator conserves photon number.
StokesMoments moments(const BlockDensity& state);
StokesMoments moments(const TwoModeState& state);

/// |<S>| / <S0>, with 0 for the vacuum.
double degree_stokes(const StokesMoments& m);
double degree_stokes(const BlockDensity& state);
double degree_stokes(const TwoModeState& state);

/// max |Sx^2 + Sy^2 + Sz^2 - n(n+2) I|.
double casimir_check(int n);

/// Largest elementwise residual of [Sx,Sy] = 2iSz and its cyclic versions.
double commutator_check(int n);

struct UncertaintyCheck {
  double lhs = 0.0;  // sum of variances
  double rhs = 0.0;  // 2 <S0>
};

UncertaintyCheck uncertainty_check(const StokesMoments& m);
UncertaintyCheck uncertainty_check(const BlockDensity& state);
UncertaintyCheck uncertainty_check(const TwoModeState& state);

}  // namespace qpol
