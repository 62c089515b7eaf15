#pragma once

#include <string>
#include <vector>

#include "qpol/states.hpp"

namespace qpol {

/// Eigenvalues of one block, clipped to [0,1] and sorted descending.
struct BlockSpectrum {
  int n = 0;
  double p = 0.0;
  std::vector<double> eigenvalues;
};

using SpectralSummary = std::vector<BlockSpectrum>;

SpectralSummary spectral_summary(const BlockDensity& state);

/// Rank-one spectra with the given photon-number distribution (pure states).
SpectralSummary pure_spectrum(const std::vector<std::pair<int, double>>& distribution);

/// Eigenvalues at or below this are treated as exact zeros.
inline constexpr double kZeroEigenvalue = 1e-12;

/// sum_n lambda_n^s with 0^s = 0, for s > 0.
double xi(const BlockSpectrum& block, double s);

/// Number of eigenvalues above kZeroEigenvalue.
int spectral_rank(const BlockSpectrum& block);

double degree_hs(const SpectralSummary& spectrum);
double degree_hs(const BlockDensity& state);
double degree_hs(const TwoModeState& state);

double degree_bures(const SpectralSummary& spectrum);
double degree_bures(const BlockDensity& state);
double degree_bures(const TwoModeState& state);

struct ChernoffResult {
  double value = 0.0;       // the degree
  double bracket = 1.0;     // infimum of the bracket over s
  double s_star = 0.0;      // minimizing s; 0 when the s -> 0 limit wins
  double endpoint = 1.0;    // s -> 0 limit of the bracket
};

ChernoffResult chernoff(const SpectralSummary& spectrum);
double degree_chernoff(const SpectralSummary& spectrum);
double degree_chernoff(const BlockDensity& state);
double degree_chernoff(const TwoModeState& state);

/// Bracket [sum_N p_N (N+1)^{1-1/s} (xi_N^{(s)})^{1/s}]^s at s in (0,1].
double chernoff_bracket(const SpectralSummary& spectrum, double s);

/// Uhlmann fidelity of two block-diagonal states, computed blockwise.
double fidelity(const BlockDensity& rho, const BlockDensity& sigma);

enum class DistanceMeasure { hs, bures, chernoff };

struct UnpolarizedOptimum {
  UnpolarizedSpec sigma;
  double degree = 0.0;
};

/// Direct numerical optimization of the distance to the unpolarized set over
/// the weights pi_N on the occupied manifolds (at most three), using matrix
/// functions rather than the closed forms. Verification oracle.
UnpolarizedOptimum sup_over_unpolarized(const BlockDensity& state, DistanceMeasure measure);

// Maximal degrees at fixed mean photon number.

struct MaxCurvePoint {
  double nbar = 0.0;
  double value = 0.0;
  std::string measure;
};

double max_hs(double nbar);
double max_bures(double nbar);
double max_chernoff(double nbar);
double max_distance_degree(DistanceMeasure measure, double nbar);

std::string measure_tag(DistanceMeasure measure);

std::vector<MaxCurvePoint> max_curve(DistanceMeasure measure, const std::vector<double>& nbar_grid);

struct MaxCurveBudget {
  int extra_manifolds = 3;   // manifolds up to ceil(nbar) + extra_manifolds
  int hs_cap_offset = 20;    // HS: heavy manifold up to ceil(nbar) + offset
  bool triples = true;       // also search three-manifold mixtures
  int weight_grid = 64;      // grid over the free weight of a triple
};

/// Best degree found by brute force over mixtures of pure blocks with mean
/// photon number nbar.
double max_curve_verify(DistanceMeasure measure, double nbar, const MaxCurveBudget& budget = {});

}  // namespace qpol
