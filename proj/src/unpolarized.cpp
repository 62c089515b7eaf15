#include "qpol/unpolarized.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qpol/stokes.hpp"

namespace qpol {

namespace {

constexpr double kCertifyTolerance = 1e-10;
constexpr double kRegionTolerance = 1e-12;
const double kSqrt3 = std::sqrt(3.0);
const double kSqrt6 = std::sqrt(6.0);
const double kA0Max = 1.0 / std::sqrt(2.0);

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

TwoModeState three_photon_state(const std::array<double, 4>& a, double theta1, double theta2, double theta3) {
  CVector c(4);
  c << a[0], std::polar(a[1], theta1), std::polar(a[2], theta2), std::polar(a[3], theta3);
  return TwoModeState::from_manifold(3, c);
}

}  // namespace

UnpolCertificate is_stokes_unpolarized(const TwoModeState& state) {
  UnpolCertificate out;
  const int n = state.single_manifold();
  out.n = n;
  const CVector c = state.manifold(n);

  Complex sum{};
  double sz = 0.0;
  for (int k = 0; k <= n; ++k) {
    if (k < n) sum += c(k) * std::conj(c(k + 1)) * std::sqrt(static_cast<double>((k + 1) * (n - k)));
    sz += std::norm(c(k)) * (2 * k - n);
  }
  out.sx = 2.0 * sum.real();
  out.sy = 2.0 * sum.imag();
  out.sz = sz;

  const StokesMoments m = moments(state);
  out.variances = m.var;
  out.path_disagreement =
      std::max({std::abs(out.sx - m.vec[0]), std::abs(out.sy - m.vec[1]), std::abs(out.sz - m.vec[2])});
  out.certified = std::abs(out.sx) <= kCertifyTolerance && std::abs(out.sy) <= kCertifyTolerance &&
                  std::abs(out.sz) <= kCertifyTolerance;
  return out;
}

TwoModeState symmetric_family(int n, const std::vector<Complex>& half, FamilySign sign) {
  if (n < 0) throw IndexError("negative manifold");
  if (n == 1 || n == 3) throw Unsupported("no symmetric unpolarized states in manifold " + std::to_string(n));
  if (n == 0) return TwoModeState::from_manifold(0, CVector::Ones(1));
  const int middle = n / 2;
  if (static_cast<int>(half.size()) != middle + 1) {
    throw InvalidState("symmetric family in manifold " + std::to_string(n) + " needs " + std::to_string(middle + 1) +
                       " amplitudes");
  }
  const double s = sign == FamilySign::upper ? 1.0 : -1.0;
  auto partner = [&](int k, Complex value) {
    const double parity = k % 2 == 0 ? 1.0 : -1.0;
    return s * parity * Complex{0.0, 1.0} * std::conj(value);
  };

  CVector c = CVector::Zero(n + 1);
  for (int k = 0; k < middle; ++k) {
    c(k) = half[k];
    c(n - k) = partner(k, half[k]);
  }
  if (n % 2 == 0) {
    // c_m = +-(-1)^m i c_m^* fixes the phase of the middle amplitude.
    const double phase = std::arg(partner(middle, Complex{1.0, 0.0})) / 2.0;
    c(middle) = std::polar(std::abs(half[middle]), phase);
  }
  return TwoModeState::from_manifold(n, c);
}

TwoModeState two_photon_family(double a, double theta) {
  if (!(a >= -kRegionTolerance && a <= kA0Max + kRegionTolerance)) {
    throw OutsideRegion("two-photon family needs 0 <= a <= 1/sqrt(2)");
  }
  a = std::clamp(a, 0.0, kA0Max);
  CVector c(3);
  c << std::polar(a, theta), Complex{0.0, std::sqrt(std::max(0.0, 1.0 - 2.0 * a * a))}, std::polar(a, -theta);
  return TwoModeState::from_manifold(2, c);
}

std::array<double, 3> two_photon_variances(double a, double theta) {
  const double a2 = a * a;
  return {4.0 - 4.0 * a2 * (1.0 - std::cos(2.0 * theta)), 4.0 - 4.0 * a2 * (1.0 + std::cos(2.0 * theta)), 8.0 * a2};
}

double sail_border(SailBorder border, double a0) {
  const double t = std::acos(clamp_unit(std::sqrt(2.0) * a0));
  switch (border) {
    case SailBorder::left:
      return kSqrt3 * a0;
    case SailBorder::right:
      return -kSqrt3 * a0 - kSqrt6 * std::cos((2.0 * kPi + t) / 3.0);
    case SailBorder::lower:
      return kSqrt3 * a0 - kSqrt6 * std::cos((kPi + t) / 3.0);
  }
  return 0.0;
}

SailClassification sail_region(double a0, double a2) {
  SailClassification out;
  if (!std::isfinite(a0) || !std::isfinite(a2)) return out;
  if (a0 < -kRegionTolerance || a0 > kA0Max + kRegionTolerance) return out;
  const double x = std::clamp(a0, 0.0, kA0Max);

  const double lower = sail_border(SailBorder::lower, x);
  const bool left_active = x <= 0.5 + kRegionTolerance;
  const bool right_active = x >= 0.5 - kRegionTolerance;
  const double left = sail_border(SailBorder::left, x);
  const double right = sail_border(SailBorder::right, x);
  const double upper = x <= 0.5 ? left : right;

  if (a2 < lower - kRegionTolerance || a2 > upper + kRegionTolerance) return out;
  out.lower = std::abs(a2 - lower) <= kRegionTolerance;
  out.left = left_active && std::abs(a2 - left) <= kRegionTolerance;
  out.right = right_active && std::abs(a2 - right) <= kRegionTolerance;
  const bool edge_a0 = a0 <= kRegionTolerance || a0 >= kA0Max - kRegionTolerance;
  out.zone = (out.lower || out.left || out.right || edge_a0) ? SailZone::on_border : SailZone::inside;
  return out;
}

std::array<double, 2> three_photon_moduli(double a0, double a2) {
  const double a1 = std::sqrt(std::max(0.0, 3.0 - 6.0 * a0 * a0 - 2.0 * a2 * a2)) / 2.0;
  const double a3 = std::sqrt(std::max(0.0, 1.0 + 2.0 * a0 * a0 - 2.0 * a2 * a2)) / 2.0;
  return {a1, a3};
}

std::vector<TwoModeState> three_photon_solve(const SailPoint& point) {
  if (sail_region(point.a0, point.a2).zone == SailZone::outside) {
    throw OutsideRegion("(a0, a2) lies outside the admissible three-photon region");
  }
  const double a0 = std::max(0.0, point.a0);
  const double a2 = std::max(0.0, point.a2);
  const auto [a1, a3] = three_photon_moduli(a0, a2);
  const std::array<double, 4> a{a0, a1, a2, a3};

  // Terms of the S_x/S_y condition as vectors in the plane:
  //   L1 e^{-i t1} + L2 e^{i(t1 - t2)} + L3 e^{i(t2 - t3)} = 0.
  const double l1 = kSqrt3 * a0 * a1;
  const double l2 = 2.0 * a1 * a2;
  const double l3 = kSqrt3 * a2 * a3;
  const double slack = std::min({l1 + l2 - l3, l1 + l3 - l2, l2 + l3 - l1});

  // The last two terms must add up to L1 e^{iu}; measure their directions
  // relative to u.
  const double u = kPi - point.theta1;
  double opening = 0.0;
  if (l1 * l2 > 0.0) opening = std::acos(clamp_unit((l1 * l1 + l2 * l2 - l3 * l3) / (2.0 * l1 * l2)));

  std::vector<TwoModeState> out;
  const int orientations = slack <= kRegionTolerance ? 1 : 2;
  for (int i = 0; i < orientations; ++i) {
    const double d2 = i == 0 ? opening : -opening;
    const double d3 = std::atan2(l2 * std::sin(d2), l1 - l2 * std::cos(d2));
    const double theta2 = point.theta1 - (u + d2);
    const double theta3 = theta2 - (u - d3);
    out.push_back(three_photon_state(a, point.theta1, theta2, theta3));
  }
  return out;
}

std::array<double, 3> three_photon_variances(const TwoModeState& state) {
  if (state.single_manifold() != 3) throw InvalidState("three-photon variances need a state in manifold 3");
  const CVector c = state.manifold(3);
  const double inner = std::norm(c(1)) + std::norm(c(2));
  const double cross = (std::conj(c(0)) * c(2)).real() + (std::conj(c(1)) * c(3)).real();
  return {3.0 + 4.0 * inner + 4.0 * kSqrt3 * cross, 3.0 + 4.0 * inner - 4.0 * kSqrt3 * cross, 9.0 - 8.0 * inner};
}

double constant_variance_curve(double a0, double sz_variance) {
  return std::sqrt(std::max(0.0, 3.0 * a0 * a0 - (sz_variance - 3.0) / 4.0));
}

TwoModeState mirror_state(const TwoModeState& state) {
  const int n = state.single_manifold();
  const CVector c = state.manifold(n);
  CVector out(n + 1);
  for (int k = 0; k <= n; ++k) out(k) = std::conj(c(n - k));
  return TwoModeState::from_manifold(n, out);
}

}  // namespace qpol
