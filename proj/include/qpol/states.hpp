#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qpol/types.hpp"

namespace qpol {

/// Basis ket |k, n-k>: n photons in total, k of them in the H mode.
struct FockIndex {
  int n = 0;
  int k = 0;

  auto operator<=>(const FockIndex&) const = default;
};

/// Throws IndexError unless 0 <= k <= n.
void validate_index(const FockIndex& index);

/// Pure two-mode state with sparse amplitudes c_{n,k}, possibly spanning
/// several excitation manifolds.
class TwoModeState {
 public:
  using AmplitudeMap = std::map<FockIndex, Complex>;

  /// Normalizes the amplitudes. Throws IndexError for invalid indices and
  /// InvalidState when every amplitude vanishes.
  explicit TwoModeState(AmplitudeMap amplitudes);

  /// Single-manifold state from a dense vector indexed by k.
  static TwoModeState from_manifold(int n, const CVector& amplitudes);

  int cutoff() const { return cutoff_; }
  const AmplitudeMap& amplitudes() const { return amplitudes_; }
  Complex amplitude(const FockIndex& index) const;

  /// Factor that was multiplied into the input amplitudes to normalize them.
  double normalization_factor() const { return normalization_factor_; }

  /// Dense amplitude vector of manifold n (zeros where nothing is stored).
  CVector manifold(int n) const;

  /// Manifolds carrying nonzero weight, ascending.
  std::vector<int> occupied_manifolds() const;

  /// Single manifold occupied by the state; throws InvalidState otherwise.
  int single_manifold() const;

 private:
  AmplitudeMap amplitudes_;
  int cutoff_ = 0;
  double normalization_factor_ = 1.0;
};

/// One excitation-manifold block p_N rho_N of a block-diagonal state.
struct Block {
  int n = 0;
  double p = 0.0;
  CMatrix rho;
};

/// Block-diagonal density operator  (+)_N p_N rho_N.
class BlockDensity {
 public:
  /// Validates the invariants: p_N >= 0, sum p_N = 1, each rho_N Hermitian,
  /// positive semidefinite and of unit trace. Zero-weight blocks are dropped.
  explicit BlockDensity(std::vector<Block> blocks);

  /// Rescales the weights to sum to one and each rho_N to unit trace before
  /// validating the remaining invariants.
  static BlockDensity renormalized(std::vector<Block> blocks);

  int cutoff() const { return cutoff_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  /// Block of manifold n, or nullptr when that manifold carries no weight.
  const Block* find(int n) const;

 private:
  std::vector<Block> blocks_;
  int cutoff_ = 0;
};

/// Weights pi_N of an SU(2)-invariant state (+)_N pi_N 1_N/(N+1).
struct UnpolarizedSpec {
  std::map<int, double> weights;
};

using AnyState = std::variant<TwoModeState, BlockDensity>;

/// make_pure: normalized pure state from (index, amplitude) pairs.
TwoModeState make_pure(const std::vector<std::pair<FockIndex, Complex>>& amplitudes);

/// Photon-number projection of a pure state into its block-diagonal form.
BlockDensity pure_to_block(const TwoModeState& state);

/// (+)_N pi_N 1_N/(N+1). Throws InvalidState for invalid weights.
BlockDensity unpolarized_state(const UnpolarizedSpec& spec);

/// max_N (1 - |<a_N|b_N>| / (|a_N| |b_N|)); 1 when the occupied manifolds differ.
double manifold_infidelity(const TwoModeState& a, const TwoModeState& b);

/// Largest elementwise deviation between two block densities, including the
/// weights; 1 when they occupy different manifolds.
double block_deviation(const BlockDensity& a, const BlockDensity& b);

/// JSON document I/O. Throws ParseError for malformed documents and
/// InvalidState / IndexError for invariant violations.
AnyState load_state(std::string_view text);
std::string save_state(const AnyState& state);

}  // namespace qpol
