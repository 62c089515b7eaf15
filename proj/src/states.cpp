#include "qpol/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace qpol {

namespace {

constexpr double kWeightTolerance = 1e-9;
constexpr double kHermitianTolerance = 1e-12;
constexpr double kTraceTolerance = 1e-10;
constexpr double kPsdTolerance = 1e-10;

std::string describe(const FockIndex& index) {
  return "(n=" + std::to_string(index.n) + ", k=" + std::to_string(index.k) + ")";
}

void validate_block_shape(const Block& block) {
  if (block.n < 0) throw IndexError("negative manifold " + std::to_string(block.n));
  const auto dim = static_cast<Eigen::Index>(block.n) + 1;
  if (block.rho.rows() != dim || block.rho.cols() != dim) {
    throw InvalidState("block n=" + std::to_string(block.n) + " must be " + std::to_string(dim) + "x" +
                       std::to_string(dim));
  }
  if (!std::isfinite(block.p) || block.p < 0.0) {
    throw InvalidState("block n=" + std::to_string(block.n) + " has invalid weight");
  }
  if (!block.rho.allFinite()) throw InvalidState("block n=" + std::to_string(block.n) + " has non-finite entries");
}

void validate_block_operator(const Block& block) {
  const double asymmetry = (block.rho - block.rho.adjoint()).cwiseAbs().maxCoeff();
  if (asymmetry > kHermitianTolerance) {
    throw InvalidState("block n=" + std::to_string(block.n) + " is not Hermitian");
  }
  const double trace = block.rho.trace().real();
  if (std::abs(trace - 1.0) > kTraceTolerance) {
    throw InvalidState("block n=" + std::to_string(block.n) + " does not have unit trace");
  }
  const CMatrix hermitian = 0.5 * (block.rho + block.rho.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kPsdTolerance) {
    throw InvalidState("block n=" + std::to_string(block.n) + " is not positive semidefinite");
  }
}

}  // namespace

void validate_index(const FockIndex& index) {
  if (index.n < 0 || index.k < 0 || index.k > index.n) throw IndexError("invalid Fock index " + describe(index));
}

TwoModeState::TwoModeState(AmplitudeMap amplitudes) : amplitudes_(std::move(amplitudes)) {
  double norm2 = 0.0;
  for (const auto& [index, value] : amplitudes_) {
    validate_index(index);
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      throw InvalidState("non-finite amplitude at " + describe(index));
    }
    norm2 += std::norm(value);
    cutoff_ = std::max(cutoff_, index.n);
  }
  if (!(norm2 > 0.0)) throw InvalidState("all amplitudes vanish");
  normalization_factor_ = 1.0 / std::sqrt(norm2);
  for (auto& entry : amplitudes_) entry.second *= normalization_factor_;
}

TwoModeState TwoModeState::from_manifold(int n, const CVector& amplitudes) {
  if (n < 0 || amplitudes.size() != n + 1) throw IndexError("manifold vector size does not match n+1");
  AmplitudeMap map;
  for (int k = 0; k <= n; ++k) map.emplace(FockIndex{n, k}, amplitudes(k));
  return TwoModeState(std::move(map));
}

Complex TwoModeState::amplitude(const FockIndex& index) const {
  const auto it = amplitudes_.find(index);
  return it == amplitudes_.end() ? Complex{} : it->second;
}

CVector TwoModeState::manifold(int n) const {
  CVector out = CVector::Zero(n + 1);
  for (auto it = amplitudes_.lower_bound({n, 0}); it != amplitudes_.end() && it->first.n == n; ++it) {
    out(it->first.k) = it->second;
  }
  return out;
}

std::vector<int> TwoModeState::occupied_manifolds() const {
  std::vector<int> out;
  for (const auto& [index, value] : amplitudes_) {
    if (value == Complex{}) continue;
    if (out.empty() || out.back() != index.n) out.push_back(index.n);
  }
  return out;
}

int TwoModeState::single_manifold() const {
  const auto occupied = occupied_manifolds();
  if (occupied.size() != 1) throw InvalidState("state spans more than one excitation manifold");
  return occupied.front();
}

BlockDensity::BlockDensity(std::vector<Block> blocks) {
  double total = 0.0;
  for (const auto& block : blocks) {
    validate_block_shape(block);
    total += block.p;
    cutoff_ = std::max(cutoff_, block.n);
  }
  if (std::abs(total - 1.0) > kWeightTolerance) throw InvalidState("block weights do not sum to one");

  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) { return a.n < b.n; });
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    if (blocks[i].n == blocks[i - 1].n) throw InvalidState("duplicate block n=" + std::to_string(blocks[i].n));
  }
  for (auto& block : blocks) {
    if (block.p == 0.0) continue;
    validate_block_operator(block);
    block.rho = 0.5 * (block.rho + block.rho.adjoint()).eval();
    blocks_.push_back(std::move(block));
  }
}

BlockDensity BlockDensity::renormalized(std::vector<Block> blocks) {
  double total = 0.0;
  for (const auto& block : blocks) {
    validate_block_shape(block);
    total += block.p;
  }
  if (!(total > 0.0)) throw InvalidState("block weights vanish");
  for (auto& block : blocks) {
    block.p /= total;
    if (block.p == 0.0) continue;
    const double trace = block.rho.trace().real();
    if (!(trace > 0.0)) throw InvalidState("block n=" + std::to_string(block.n) + " has non-positive trace");
    block.rho /= trace;
  }
  return BlockDensity(std::move(blocks));
}

const Block* BlockDensity::find(int n) const {
  for (const auto& block : blocks_) {
    if (block.n == n) return &block;
  }
  return nullptr;
}

TwoModeState make_pure(const std::vector<std::pair<FockIndex, Complex>>& amplitudes) {
  TwoModeState::AmplitudeMap map;
  for (const auto& [index, value] : amplitudes) {
    validate_index(index);
    if (!map.emplace(index, value).second) throw InvalidState("duplicate amplitude at " + describe(index));
  }
  return TwoModeState(std::move(map));
}

BlockDensity pure_to_block(const TwoModeState& state) {
  std::vector<Block> blocks;
  for (int n : state.occupied_manifolds()) {
    const CVector v = state.manifold(n);
    const double p = v.squaredNorm();
    if (p == 0.0) continue;
    blocks.push_back({n, p, (v * v.adjoint()) / p});
  }
  return BlockDensity(std::move(blocks));
}

BlockDensity unpolarized_state(const UnpolarizedSpec& spec) {
  std::vector<Block> blocks;
  for (const auto& [n, weight] : spec.weights) {
    if (n < 0) throw IndexError("negative manifold in unpolarized spec");
    blocks.push_back({n, weight, CMatrix::Identity(n + 1, n + 1) / static_cast<double>(n + 1)});
  }
  return BlockDensity(std::move(blocks));
}

double manifold_infidelity(const TwoModeState& a, const TwoModeState& b) {
  const auto occupied = a.occupied_manifolds();
  if (occupied != b.occupied_manifolds()) return 1.0;
  double worst = 0.0;
  for (int n : occupied) {
    const CVector va = a.manifold(n);
    const CVector vb = b.manifold(n);
    const double overlap = std::abs(va.dot(vb)) / (va.norm() * vb.norm());
    worst = std::max(worst, 1.0 - overlap);
  }
  return worst;
}

double block_deviation(const BlockDensity& a, const BlockDensity& b) {
  if (a.blocks().size() != b.blocks().size()) return 1.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.blocks().size(); ++i) {
    const Block& x = a.blocks()[i];
    const Block& y = b.blocks()[i];
    if (x.n != y.n) return 1.0;
    worst = std::max(worst, std::abs(x.p - y.p));
    worst = std::max(worst, (x.rho - y.rho).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace qpol
