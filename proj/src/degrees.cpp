#include "qpol/degrees.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "optimize.hpp"
#include "qpol/channel.hpp"

namespace qpol {

namespace {

constexpr double kGridStart = 1e-4;
constexpr double kGridStep = 1e-3;
constexpr double kGoldenTolerance = 1e-10;

double log_sum_exp(const std::vector<double>& terms) {
  double top = -std::numeric_limits<double>::infinity();
  for (double t : terms) top = std::max(top, t);
  if (!std::isfinite(top)) return top;
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - top);
  return top + std::log(sum);
}

double log_xi(const BlockSpectrum& block, double s) {
  std::vector<double> terms;
  for (double lambda : block.eigenvalues) {
    if (lambda > kZeroEigenvalue) terms.push_back(s * std::log(lambda));
  }
  return log_sum_exp(terms);
}

double log_bracket(const SpectralSummary& spectrum, double s) {
  std::vector<double> terms;
  for (const BlockSpectrum& block : spectrum) {
    if (block.p <= 0.0) continue;
    const double dim = block.n + 1.0;
    terms.push_back(std::log(block.p) + (1.0 - 1.0 / s) * std::log(dim) + log_xi(block, s) / s);
  }
  return s * log_sum_exp(terms);
}

// Positive semidefinite square root through the eigendecomposition.
CMatrix psd_sqrt(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (m + m.adjoint()));
  RVector roots = solver.eigenvalues();
  for (Eigen::Index i = 0; i < roots.size(); ++i) roots(i) = roots(i) > kZeroEigenvalue ? std::sqrt(roots(i)) : 0.0;
  return solver.eigenvectors() * roots.asDiagonal() * solver.eigenvectors().adjoint();
}

// rho^s for a PSD matrix with 0^s = 0 (s > 0) and the support projector at s = 0.
CMatrix psd_power(const CMatrix& m, double s) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (m + m.adjoint()));
  RVector powered(solver.eigenvalues().size());
  for (Eigen::Index i = 0; i < powered.size(); ++i) {
    const double lambda = solver.eigenvalues()(i);
    powered(i) = lambda > kZeroEigenvalue ? (s == 0.0 ? 1.0 : std::pow(lambda, s)) : 0.0;
  }
  return solver.eigenvectors() * powered.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace

double degree_hs(const SpectralSummary& spectrum) {
  double total = 0.0;
  for (const BlockSpectrum& block : spectrum) {
    double xi2 = 0.0;
    for (double lambda : block.eigenvalues) xi2 += lambda * lambda;
    total += block.p * block.p * (xi2 - 1.0 / (block.n + 1.0));
  }
  return std::max(0.0, total);
}

double degree_hs(const BlockDensity& state) { return degree_hs(spectral_summary(state)); }
double degree_hs(const TwoModeState& state) { return degree_hs(block_diagonalize(state)); }

double degree_bures(const SpectralSummary& spectrum) {
  double total = 0.0;
  for (const BlockSpectrum& block : spectrum) {
    const double half = xi(block, 0.5);
    total += block.p / (block.n + 1.0) * half * half;
  }
  return std::clamp(1.0 - std::sqrt(total), 0.0, 1.0);
}

double degree_bures(const BlockDensity& state) { return degree_bures(spectral_summary(state)); }
double degree_bures(const TwoModeState& state) { return degree_bures(block_diagonalize(state)); }

double chernoff_bracket(const SpectralSummary& spectrum, double s) { return std::exp(log_bracket(spectrum, s)); }

ChernoffResult chernoff(const SpectralSummary& spectrum) {
  ChernoffResult out;
  // s -> 0: the bracket tends to the largest rank_N / (N+1) over occupied blocks.
  out.endpoint = 0.0;
  for (const BlockSpectrum& block : spectrum) {
    if (block.p > 0.0) out.endpoint = std::max(out.endpoint, spectral_rank(block) / (block.n + 1.0));
  }

  std::vector<double> grid;
  for (double s = kGridStart; s < 1.0; s += kGridStep) grid.push_back(s);
  grid.push_back(1.0);
  std::size_t best = 0;
  double best_log = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double value = log_bracket(spectrum, grid[i]);
    if (value < best_log) {
      best_log = value;
      best = i;
    }
  }
  const double lo = grid[best == 0 ? 0 : best - 1];
  const double hi = grid[std::min(best + 1, grid.size() - 1)];
  const auto refined =
      detail::golden_section([&](double s) { return log_bracket(spectrum, s); }, lo, hi, kGoldenTolerance);
  double interior = std::exp(std::min(refined.value, best_log));
  double s_star = refined.value <= best_log ? refined.x : grid[best];

  if (out.endpoint <= interior) {
    out.bracket = out.endpoint;
    out.s_star = 0.0;
  } else {
    out.bracket = interior;
    out.s_star = s_star;
  }
  out.value = std::clamp(1.0 - out.bracket, 0.0, 1.0);
  return out;
}

double degree_chernoff(const SpectralSummary& spectrum) { return chernoff(spectrum).value; }
double degree_chernoff(const BlockDensity& state) { return degree_chernoff(spectral_summary(state)); }
double degree_chernoff(const TwoModeState& state) { return degree_chernoff(block_diagonalize(state)); }

double fidelity(const BlockDensity& rho, const BlockDensity& sigma) {
  double root = 0.0;
  for (const Block& a : rho.blocks()) {
    const Block* b = sigma.find(a.n);
    if (b == nullptr) continue;
    const CMatrix sq = psd_sqrt(b->rho);
    const CMatrix inner = psd_sqrt(sq * a.rho * sq);
    root += std::sqrt(a.p * b->p) * inner.trace().real();
  }
  return std::clamp(root * root, 0.0, 1.0);
}

UnpolarizedOptimum sup_over_unpolarized(const BlockDensity& state, DistanceMeasure measure) {
  const auto& blocks = state.blocks();
  if (blocks.size() > 3) throw Unsupported("weight optimization supports at most three manifolds");

  auto make_sigma = [&](const std::vector<double>& pi) {
    UnpolarizedSpec spec;
    for (std::size_t i = 0; i < blocks.size(); ++i) spec.weights[blocks[i].n] = pi[i];
    return spec;
  };

  // Quantity to maximize as a function of the weights (degree = its complement).
  auto score = [&](const std::vector<double>& pi) -> double {
    switch (measure) {
      case DistanceMeasure::hs: {
        double distance = 0.0;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
          const Eigen::Index dim = blocks[i].n + 1;
          const CMatrix diff = blocks[i].p * blocks[i].rho -
                               CMatrix::Identity(dim, dim) * (pi[i] / static_cast<double>(dim));
          distance += diff.squaredNorm();
        }
        return -distance;
      }
      case DistanceMeasure::bures: {
        // Zero-weight manifolds are dropped by BlockDensity, so keep every
        // weight strictly positive.
        std::vector<double> positive(pi);
        for (double& w : positive) w = std::max(w, 1e-300);
        double total = 0.0;
        for (double w : positive) total += w;
        for (double& w : positive) w /= total;
        return std::sqrt(fidelity(state, unpolarized_state(make_sigma(positive))));
      }
      case DistanceMeasure::chernoff: {
        std::vector<CMatrix> support;
        for (const Block& b : blocks) support.push_back(psd_power(b.rho, 0.0));
        auto overlap = [&](double s) {
          double total = 0.0;
          for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (pi[i] <= 0.0) continue;
            const double dim = blocks[i].n + 1.0;
            const CMatrix rho_s = s == 0.0 ? support[i] : psd_power(blocks[i].rho, s);
            const double sigma_factor = std::pow(pi[i] / dim, 1.0 - s);
            total += std::pow(blocks[i].p, s) * sigma_factor * rho_s.trace().real();
          }
          return total;
        };
        return detail::golden_section(overlap, 0.0, 1.0, 1e-9).value;
      }
    }
    return 0.0;
  };

  std::vector<double> best_pi(blocks.size(), 1.0);
  double best = 0.0;
  if (blocks.size() == 1) {
    best = score(best_pi);
  } else if (blocks.size() == 2) {
    const auto found = detail::golden_section([&](double t) { return -score({t, 1.0 - t}); }, 0.0, 1.0, 1e-10);
    best_pi = {found.x, 1.0 - found.x};
    best = -found.value;
  } else if (blocks.size() == 3) {
    auto inner = [&](double t) {
      return detail::golden_section([&](double r) { return -score({t, (1.0 - t) * r, (1.0 - t) * (1.0 - r)}); }, 0.0,
                                    1.0, 1e-9);
    };
    const auto found = detail::golden_section([&](double t) { return inner(t).value; }, 0.0, 1.0, 1e-9);
    const double r = inner(found.x).x;
    best_pi = {found.x, (1.0 - found.x) * r, (1.0 - found.x) * (1.0 - r)};
    best = -found.value;
  }

  UnpolarizedOptimum out;
  out.sigma = make_sigma(best_pi);
  out.degree = measure == DistanceMeasure::hs ? -best : 1.0 - best;
  return out;
}

}  // namespace qpol
