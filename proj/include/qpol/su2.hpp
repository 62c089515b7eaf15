#pragma once

#include "qpol/states.hpp"

namespace qpol {

/// Operator parameters of U(alpha, beta, gamma) = exp(-i alpha Sz) exp(-i beta Sy) exp(-i gamma Sz).
struct EulerAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// Equivalent angles in [0,2pi) x [0,pi] x [0,2pi) giving the same matrix in
/// every manifold.
EulerAngles canonicalize(const EulerAngles& angles);

/// Unitary (n+1)x(n+1) representation of U in manifold n.
CMatrix rotation_matrix(int n, const EulerAngles& angles);

TwoModeState transform(const TwoModeState& state, const EulerAngles& angles);
BlockDensity transform(const BlockDensity& state, const EulerAngles& angles);

/// sum_N p_N Tr(rho_N U rho_N U^dagger).
double overlap_objective(const BlockDensity& state, const EulerAngles& angles);

/// Multi-start seed layout for min_overlap_search. Shifting alpha, beta or
/// gamma by pi changes each manifold by a global phase only, so seeds sit on a
/// uniform grid over [0,pi) x [0,pi/2] x [0,pi): alpha and gamma step
/// pi/count, beta spans [0,pi/2] inclusive.
struct SeedGrid {
  int alpha = 8;
  int beta = 8;
  int gamma = 8;
  int refine = 5;              // best seeds refined locally
  double f_tolerance = 1e-10;  // spread of simplex values at convergence
  int max_evaluations = 2000;  // per refined start
};

struct OverlapSearch {
  EulerAngles angles;  // canonical argmin
  double overlap = 0.0;
  int evaluations = 0;
};

/// Minimizes overlap_objective over U. Among minima within 1e-9 of the best
/// the lexicographically smallest canonical angles are reported.
OverlapSearch min_overlap_search(const BlockDensity& state, const SeedGrid& seeds = {});

/// Same search over arbitrary Hermitian blocks (no trace normalization
/// required), minimizing sum_N p_N Tr(r_N U r_N U^dagger).
OverlapSearch min_overlap_search(const std::vector<Block>& blocks, const SeedGrid& seeds = {});

}  // namespace qpol
