#pragma once

#include <vector>

#include "qpol/degrees.hpp"
#include "qpol/states.hpp"
#include "qpol/su2.hpp"

namespace qpol {

/// Product rule on the unit sphere: Gauss-Legendre in cos(theta) and the
/// trapezoid rule in phi. With the default sizes it integrates Q^2 exactly
/// for states up to the given cutoff.
class SphereGrid {
 public:
  explicit SphereGrid(int cutoff);
  SphereGrid(int polar_nodes, int azimuthal_nodes);

  int polar_nodes() const { return static_cast<int>(cos_theta_.size()); }
  int azimuthal_nodes() const { return static_cast<int>(phi_.size()); }

  const std::vector<double>& cos_theta() const { return cos_theta_; }
  const std::vector<double>& polar_weights() const { return polar_weights_; }
  const std::vector<double>& phi() const { return phi_; }
  double azimuthal_weight() const { return azimuthal_weight_; }

  struct Node {
    double theta;
    double phi;
    double weight;
  };
  std::vector<Node> nodes() const;

  double total_weight() const;

 private:
  std::vector<double> cos_theta_;
  std::vector<double> polar_weights_;
  std::vector<double> phi_;
  double azimuthal_weight_ = 0.0;
};

struct SphereDirection {
  double theta = 0.0;  // polar angle
  double phi = 0.0;    // azimuth
};

/// |n; Omega> = sum_k C(n,k)^{1/2} cos^k(theta/2) sin^{n-k}(theta/2) e^{ik phi} |k, n-k>.
TwoModeState su2_coherent(int n, const SphereDirection& omega);

/// Amplitude vector of su2_coherent without the state wrapper.
CVector coherent_amplitudes(int n, const SphereDirection& omega);

/// Q(Omega) = sum_N (N+1)/(4 pi) <N;Omega| rho |N;Omega>.
double q_function(const BlockDensity& state, const SphereDirection& omega);
double q_function(const TwoModeState& state, const SphereDirection& omega);

struct QIntegrals {
  double integral = 0.0;          // int Q dOmega
  double squared_integral = 0.0;  // int Q^2 dOmega
};

/// Quadrature of Q and Q^2 on the grid (the default grid is exact at the
/// state's cutoff).
QIntegrals q_integrals(const BlockDensity& state);
QIntegrals q_integrals(const BlockDensity& state, const SphereGrid& grid);

/// D_Q = 4 pi int Q^2 dOmega - 1.
double dispersion_q(const BlockDensity& state);
double dispersion_q(const TwoModeState& state);

/// P_Q = D_Q / (D_Q + 1).
double degree_q(const BlockDensity& state);
double degree_q(const TwoModeState& state);

enum class PdNormalization { raw, purity };

struct DistinguishabilityResult {
  double value = 0.0;
  double overlap = 0.0;  // minimal (normalized) averaged overlap
  EulerAngles angles;
  int evaluations = 0;
};

DistinguishabilityResult distinguishability(const BlockDensity& state, PdNormalization mode = PdNormalization::raw,
                                            const SeedGrid& seeds = {});
double degree_d(const BlockDensity& state, PdNormalization mode = PdNormalization::raw);
double degree_d(const TwoModeState& state, PdNormalization mode = PdNormalization::raw);

/// P_p = sum_{N>=1} p_N ((N+1) Tr rho_N^2 - 1) / N.
double degree_p(const BlockDensity& state);
double degree_p(const TwoModeState& state);

/// Mixture of coherent states |n-1;Omega>, |n;Omega> with n = ceil(nbar) and
/// mean photon number nbar, Omega at the north pole.
BlockDensity adjacent_coherent_mixture(double nbar);

double max_q(double nbar);
/// Maximum of P_d (raw) and of P_p at mean photon number nbar.
double max_d(double nbar);
double max_p(double nbar);

std::vector<MaxCurvePoint> max_curve_q(const std::vector<double>& nbar_grid);
std::vector<MaxCurvePoint> max_curve_d(const std::vector<double>& nbar_grid);
std::vector<MaxCurvePoint> max_curve_p(const std::vector<double>& nbar_grid);

}  // namespace qpol
