#pragma once

#include <array>
#include <vector>

#include "qpol/states.hpp"

namespace qpol {

/// Residual Stokes vector of a single-manifold pure state, evaluated both from
/// the amplitude sums and from the operator matrices.
struct UnpolCertificate {
  int n = 0;
  double sx = 0.0;  // 2 Re sum_k c_k c*_{k+1} sqrt((k+1)(n-k))
  double sy = 0.0;  // 2 Im of the same sum
  double sz = 0.0;  // sum_k |c_k|^2 (2k - n)
  std::array<double, 3> variances{};
  double path_disagreement = 0.0;  // max |algebraic - matrix| over the three components
  bool certified = false;          // all residuals <= 1e-10
};

/// Throws InvalidState unless the state occupies exactly one manifold.
UnpolCertificate is_stokes_unpolarized(const TwoModeState& state);

enum class FamilySign { upper, lower };

/// State with c_{n-k} = +-(-1)^k i c_k^*. half holds c_0 .. c_{floor(n/2)};
/// for even n only the modulus of the middle entry is used (its phase is fixed
/// by the relation), for odd n the middle entry is forced to zero. n = 1 and
/// n = 3 throw Unsupported.
TwoModeState symmetric_family(int n, const std::vector<Complex>& half, FamilySign sign);

/// a e^{i theta}|0,2> + i sqrt(1-2a^2)|1,1> + a e^{-i theta}|2,0>, a in [0, 1/sqrt(2)].
TwoModeState two_photon_family(double a, double theta);

/// Closed-form variances of two_photon_family(a, theta).
std::array<double, 3> two_photon_variances(double a, double theta);

// Three-photon states: c_k = a_k e^{i theta_k} with theta_0 = 0.

enum class SailBorder { left, right, lower };
enum class SailZone { inside, on_border, outside };

struct SailClassification {
  SailZone zone = SailZone::outside;
  bool left = false;
  bool right = false;
  bool lower = false;
};

/// a2 on the given border curve at a0 (a0 in [0, 1/sqrt(2)]).
double sail_border(SailBorder border, double a0);

/// Classifies (a0, a2) against the admissible region with tolerance 1e-12.
SailClassification sail_region(double a0, double a2);

struct SailPoint {
  double a0 = 0.0;
  double a2 = 0.0;
  double theta1 = 0.0;
};

/// a1 and a3 fixed by the Stokes conditions.
std::array<double, 2> three_photon_moduli(double a0, double a2);

/// All distinct unpolarized states with the given a0, a2 and theta1: two in
/// the interior, one on a border. Throws OutsideRegion for points outside.
std::vector<TwoModeState> three_photon_solve(const SailPoint& point);

/// Closed-form variances of a certified three-photon state.
std::array<double, 3> three_photon_variances(const TwoModeState& state);

/// a2 on the curve of constant (Delta S_z)^2 through a0.
double constant_variance_curve(double a0, double sz_variance);

/// c_k -> c*_{n-k}.
TwoModeState mirror_state(const TwoModeState& state);

}  // namespace qpol
