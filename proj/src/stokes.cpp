#include "qpol/stokes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include <Eigen/Eigenvalues>

namespace qpol {

namespace {

std::unique_ptr<StokesSet> build_stokes(int n) {
  auto set = std::make_unique<StokesSet>();
  const Eigen::Index dim = n + 1;
  set->n = n;
  set->s0 = CMatrix::Identity(dim, dim) * static_cast<double>(n);
  set->sz = CMatrix::Zero(dim, dim);
  CMatrix raising = CMatrix::Zero(dim, dim);  // a_H^dagger a_V: |k> -> |k+1>
  for (int k = 0; k <= n; ++k) {
    set->sz(k, k) = static_cast<double>(2 * k - n);
    if (k < n) raising(k + 1, k) = std::sqrt(static_cast<double>((k + 1) * (n - k)));
  }
  const CMatrix lowering = raising.adjoint();
  set->sx = raising + lowering;
  set->sy = Complex{0.0, 1.0} * (lowering - raising);

  Eigen::SelfAdjointEigenSolver<CMatrix> solver(set->sy);
  set->sy_eigenvalues = solver.eigenvalues();
  set->sy_eigenvectors = solver.eigenvectors();
  return set;
}

double expectation(const CMatrix& rho, const CMatrix& op) {
  // Tr(rho op) without forming the product.
  return rho.cwiseProduct(op.transpose()).sum().real();
}

}  // namespace

const StokesSet& stokes_matrices(int n) {
  if (n < 0) throw IndexError("negative manifold");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<StokesSet>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = build_stokes(n);
  return *slot;
}

StokesMoments moments(const BlockDensity& state) {
  StokesMoments out;
  std::array<double, 3> second{};
  for (const Block& block : state.blocks()) {
    const StokesSet& s = stokes_matrices(block.n);
    out.s0 += block.p * block.n;
    const std::array<const CMatrix*, 3> ops{&s.sx, &s.sy, &s.sz};
    for (int i = 0; i < 3; ++i) {
      out.vec[i] += block.p * expectation(block.rho, *ops[i]);
      second[i] += block.p * expectation(block.rho, (*ops[i]) * (*ops[i]));
    }
  }
  for (int i = 0; i < 3; ++i) out.var[i] = second[i] - out.vec[i] * out.vec[i];
  return out;
}

StokesMoments moments(const TwoModeState& state) { return moments(pure_to_block(state)); }

double degree_stokes(const StokesMoments& m) {
  if (m.s0 <= 0.0) return 0.0;
  const double length = std::sqrt(m.vec[0] * m.vec[0] + m.vec[1] * m.vec[1] + m.vec[2] * m.vec[2]);
  return std::min(1.0, length / m.s0);
}

double degree_stokes(const BlockDensity& state) { return degree_stokes(moments(state)); }
double degree_stokes(const TwoModeState& state) { return degree_stokes(moments(state)); }

double casimir_check(int n) {
  const StokesSet& s = stokes_matrices(n);
  const CMatrix total = s.sx * s.sx + s.sy * s.sy + s.sz * s.sz;
  const CMatrix expected = CMatrix::Identity(n + 1, n + 1) * static_cast<double>(n * (n + 2));
  return (total - expected).cwiseAbs().maxCoeff();
}

double commutator_check(int n) {
  const StokesSet& s = stokes_matrices(n);
  const Complex two_i{0.0, 2.0};
  const double xy = ((s.sx * s.sy - s.sy * s.sx) - two_i * s.sz).cwiseAbs().maxCoeff();
  const double yz = ((s.sy * s.sz - s.sz * s.sy) - two_i * s.sx).cwiseAbs().maxCoeff();
  const double zx = ((s.sz * s.sx - s.sx * s.sz) - two_i * s.sy).cwiseAbs().maxCoeff();
  return std::max({xy, yz, zx});
}

UncertaintyCheck uncertainty_check(const StokesMoments& m) {
  return {m.var[0] + m.var[1] + m.var[2], 2.0 * m.s0};
}

UncertaintyCheck uncertainty_check(const BlockDensity& state) { return uncertainty_check(moments(state)); }
UncertaintyCheck uncertainty_check(const TwoModeState& state) { return uncertainty_check(moments(state)); }

}  // namespace qpol
