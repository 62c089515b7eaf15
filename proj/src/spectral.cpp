#include <algorithm>
#include <cmath>
#include <functional>

#include <Eigen/Eigenvalues>

#include "qpol/degrees.hpp"

namespace qpol {

SpectralSummary spectral_summary(const BlockDensity& state) {
  SpectralSummary out;
  for (const Block& block : state.blocks()) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(block.rho, Eigen::EigenvaluesOnly);
    BlockSpectrum spectrum{block.n, block.p, {}};
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
      spectrum.eigenvalues.push_back(std::clamp(solver.eigenvalues()(i), 0.0, 1.0));
    }
    std::sort(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end(), std::greater<>());
    out.push_back(std::move(spectrum));
  }
  return out;
}

SpectralSummary pure_spectrum(const std::vector<std::pair<int, double>>& distribution) {
  SpectralSummary out;
  for (const auto& [n, p] : distribution) {
    if (p <= 0.0) continue;
    BlockSpectrum spectrum{n, p, std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0)};
    spectrum.eigenvalues[0] = 1.0;
    out.push_back(std::move(spectrum));
  }
  return out;
}

double xi(const BlockSpectrum& block, double s) {
  double total = 0.0;
  for (double lambda : block.eigenvalues) {
    if (lambda > kZeroEigenvalue) total += std::pow(lambda, s);
  }
  return total;
}

int spectral_rank(const BlockSpectrum& block) {
  return static_cast<int>(std::count_if(block.eigenvalues.begin(), block.eigenvalues.end(),
                                        [](double lambda) { return lambda > kZeroEigenvalue; }));
}

}  // namespace qpol
