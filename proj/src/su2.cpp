#include "qpol/su2.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <tuple>
#include <vector>

#include "optimize.hpp"
#include "qpol/stokes.hpp"

namespace qpol {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
constexpr double kTieTolerance = 1e-9;

double wrap(double angle) {
  double out = std::fmod(angle, kTwoPi);
  if (out < 0.0) out += kTwoPi;
  if (out >= kTwoPi) out = 0.0;
  return out;
}

// Per-manifold data reused across objective evaluations.
struct BlockCache {
  int n = 0;
  double p = 0.0;
  CMatrix rho;
  const StokesSet* stokes = nullptr;
};

CMatrix rotation_from(const StokesSet& s, const EulerAngles& a) {
  const int n = s.n;
  CVector phase_beta(n + 1);
  for (int m = 0; m <= n; ++m) phase_beta(m) = std::polar(1.0, -a.beta * s.sy_eigenvalues(m));
  CMatrix u = s.sy_eigenvectors * phase_beta.asDiagonal() * s.sy_eigenvectors.adjoint();
  for (int k = 0; k <= n; ++k) {
    const double z = 2.0 * k - n;
    u.row(k) *= std::polar(1.0, -a.alpha * z);
    u.col(k) *= std::polar(1.0, -a.gamma * z);
  }
  return u;
}

double objective(const std::vector<BlockCache>& blocks, const EulerAngles& a) {
  double total = 0.0;
  for (const BlockCache& b : blocks) {
    const CMatrix u = rotation_from(*b.stokes, a);
    const CMatrix rotated = u * b.rho * u.adjoint();
    // Tr(rho rotated) for Hermitian arguments.
    total += b.p * b.rho.cwiseProduct(rotated.transpose()).sum().real();
  }
  return total;
}

// Euler angles of a spin-1/2 matrix u = D(alpha) exp(-i beta Sy) D(gamma), where
// u(0,0) = e^{i(alpha+gamma)} cos(beta) and u(0,1) = e^{i(alpha-gamma)} sin(beta).
EulerAngles angles_from_spin_half(const CMatrix& u) {
  const double beta = std::atan2(std::abs(u(0, 1)), std::abs(u(0, 0)));
  const double sum = std::arg(u(0, 0));
  const double diff = std::arg(u(0, 1));
  return {0.5 * (sum + diff), beta, 0.5 * (sum - diff)};
}

// exp(-i (x Px + y Py + z Pz)) with Pauli matrices P.
CMatrix spin_half_step(const std::array<double, 3>& x) {
  const double norm = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  const Complex i{0.0, 1.0};
  CMatrix out = CMatrix::Identity(2, 2) * std::cos(norm);
  if (norm == 0.0) return out;
  const double s = std::sin(norm) / norm;
  out(0, 0) -= i * s * x[2];
  out(1, 1) += i * s * x[2];
  out(0, 1) -= i * s * Complex{x[0], -x[1]};
  out(1, 0) -= i * s * Complex{x[0], x[1]};
  return out;
}

// Nelder-Mead in the chart U0 exp(-i x.P) around the incumbent, re-centred
// after every run. Avoids the coordinate singularities of the Euler angles.
detail::SimplexResult<3> polish(const std::vector<BlockCache>& blocks, const EulerAngles& start, double value,
                                const SeedGrid& seeds) {
  const StokesSet& spin_half = stokes_matrices(1);
  CMatrix centre = rotation_from(spin_half, start);
  detail::SimplexResult<3> out{{start.alpha, start.beta, start.gamma}, value, 0};
  for (int round = 0; round < 20; ++round) {
    auto f = [&](const std::array<double, 3>& x) {
      return objective(blocks, angles_from_spin_half(centre * spin_half_step(x)));
    };
    const auto local = detail::nelder_mead<3>(f, {0.0, 0.0, 0.0}, 0.05, seeds.f_tolerance, seeds.max_evaluations);
    out.evaluations += local.evaluations;
    if (!(local.value < out.value - 1e-15)) break;
    centre = centre * spin_half_step(local.x);
    const EulerAngles a = angles_from_spin_half(centre);
    out.x = {a.alpha, a.beta, a.gamma};
    out.value = local.value;
  }
  return out;
}

}  // namespace

EulerAngles canonicalize(const EulerAngles& angles) {
  EulerAngles out{angles.alpha, wrap(angles.beta), angles.gamma};
  if (out.beta > kPi) {
    // exp(-i b Sy) = exp(-i pi/2 Sz) exp(-i (2pi-b) Sy) exp(i pi/2 Sz)
    out.beta = kTwoPi - out.beta;
    out.alpha += kPi / 2.0;
    out.gamma -= kPi / 2.0;
  }
  out.alpha = wrap(out.alpha);
  out.gamma = wrap(out.gamma);
  return out;
}

CMatrix rotation_matrix(int n, const EulerAngles& angles) { return rotation_from(stokes_matrices(n), angles); }

TwoModeState transform(const TwoModeState& state, const EulerAngles& angles) {
  TwoModeState::AmplitudeMap map;
  for (int n : state.occupied_manifolds()) {
    const CVector rotated = rotation_matrix(n, angles) * state.manifold(n);
    for (int k = 0; k <= n; ++k) map.emplace(FockIndex{n, k}, rotated(k));
  }
  return TwoModeState(std::move(map));
}

BlockDensity transform(const BlockDensity& state, const EulerAngles& angles) {
  std::vector<Block> blocks;
  for (const Block& block : state.blocks()) {
    const CMatrix u = rotation_matrix(block.n, angles);
    blocks.push_back({block.n, block.p, u * block.rho * u.adjoint()});
  }
  return BlockDensity(std::move(blocks));
}

double overlap_objective(const BlockDensity& state, const EulerAngles& angles) {
  std::vector<BlockCache> blocks;
  for (const Block& b : state.blocks()) blocks.push_back({b.n, b.p, b.rho, &stokes_matrices(b.n)});
  return objective(blocks, angles);
}

OverlapSearch min_overlap_search(const BlockDensity& state, const SeedGrid& seeds) {
  return min_overlap_search(state.blocks(), seeds);
}

OverlapSearch min_overlap_search(const std::vector<Block>& input, const SeedGrid& seeds) {
  std::vector<BlockCache> blocks;
  double ceiling = 0.0;
  for (const Block& b : input) {
    blocks.push_back({b.n, b.p, b.rho, &stokes_matrices(b.n)});
    ceiling += b.p * b.rho.squaredNorm();
  }

  OverlapSearch out;
  struct Seed {
    double value;
    EulerAngles angles;
  };
  // The objective oscillates faster at higher photon numbers, so the grid is
  // refined with the cutoff.
  int cutoff = 0;
  for (const BlockCache& b : blocks) cutoff = std::max(cutoff, b.n);
  const int floor_count = std::max(24, 4 * cutoff + 4);
  const int na = std::max(seeds.alpha, floor_count);
  const int nb = std::max(seeds.beta, floor_count);
  const int ng = std::max(seeds.gamma, floor_count);

  // alpha + pi, gamma + pi and beta + pi only change the phase of each
  // manifold, so the seeds cover [0,pi) x [0,pi/2] x [0,pi).
  std::vector<Seed> grid(static_cast<std::size_t>(na) * nb * ng);
  auto index = [&](int i, int j, int l) { return (static_cast<std::size_t>(i) * nb + j) * ng + l; };
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nb; ++j) {
      for (int l = 0; l < ng; ++l) {
        grid[index(i, j, l)] = {0.0, {kPi * i / na, nb > 1 ? 0.5 * kPi * j / (nb - 1) : 0.0, kPi * l / ng}};
      }
    }
  }
  // With U = A d B (A, B diagonal phases, d real), Tr(rho U rho U^dagger) =
  // Tr((A^dagger rho A) d (B rho B^dagger) d^T), so each grid point costs O(n^2).
  for (const BlockCache& b : blocks) {
    const int dim = b.n + 1;
    for (int j = 0; j < nb; ++j) {
      const CMatrix d = rotation_from(*b.stokes, {0.0, grid[index(0, j, 0)].angles.beta, 0.0});
      for (int l = 0; l < ng; ++l) {
        const double gamma = grid[index(0, j, l)].angles.gamma;
        CMatrix conjugated(dim, dim);
        for (int r = 0; r < dim; ++r) {
          for (int c = 0; c < dim; ++c) conjugated(r, c) = b.rho(r, c) * std::polar(1.0, -gamma * 2.0 * (r - c));
        }
        const CMatrix x = d * conjugated * d.adjoint();
        for (int i = 0; i < na; ++i) {
          const double alpha = grid[index(i, j, l)].angles.alpha;
          Complex trace = 0.0;
          for (int r = 0; r < dim; ++r) {
            for (int c = 0; c < dim; ++c) trace += b.rho(r, c) * std::polar(1.0, alpha * 2.0 * (r - c)) * x(c, r);
          }
          grid[index(i, j, l)].value += b.p * trace.real();
        }
      }
    }
  }
  out.evaluations += static_cast<int>(grid.size());

  // Starts are the grid points lower than all 26 neighbours (alpha and gamma
  // periodic), best first, topped up with the lowest remaining points.
  auto at = [&](int i, int j, int l) -> const Seed& { return grid[index(i, j, l)]; };
  std::vector<Seed> basins, rest;
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nb; ++j) {
      for (int l = 0; l < ng; ++l) {
        const Seed& centre = at(i, j, l);
        bool lowest = true;
        for (int di = -1; di <= 1 && lowest; ++di) {
          for (int dj = -1; dj <= 1 && lowest; ++dj) {
            for (int dl = -1; dl <= 1 && lowest; ++dl) {
              if ((di == 0 && dj == 0 && dl == 0) || j + dj < 0 || j + dj >= nb) continue;
              const Seed& other = at((i + di + na) % na, j + dj, (l + dl + ng) % ng);
              lowest = centre.value <= other.value;
            }
          }
        }
        (lowest ? basins : rest).push_back(centre);
      }
    }
  }
  auto by_value = [](const Seed& a, const Seed& b) { return a.value < b.value; };
  std::stable_sort(basins.begin(), basins.end(), by_value);
  std::stable_sort(rest.begin(), rest.end(), by_value);
  grid = std::move(basins);
  grid.insert(grid.end(), rest.begin(), rest.end());
  const auto refine = std::min<std::size_t>(static_cast<std::size_t>(std::max(seeds.refine, 1)), grid.size());

  std::vector<Seed> minima;
  for (std::size_t i = 0; i < refine; ++i) {
    const EulerAngles& a = grid[i].angles;
    auto f = [&](const std::array<double, 3>& x) { return objective(blocks, {x[0], x[1], x[2]}); };
    const auto local = detail::nelder_mead<3>(f, {a.alpha, a.beta, a.gamma}, 0.25, seeds.f_tolerance,
                                              seeds.max_evaluations);
    const auto polished = polish(blocks, {local.x[0], local.x[1], local.x[2]}, local.value, seeds);
    out.evaluations += local.evaluations + polished.evaluations;
    minima.push_back({polished.value, canonicalize({polished.x[0], polished.x[1], polished.x[2]})});
  }
  // The lowest grid point also counts as a candidate.
  const Seed& lowest_seed = *std::min_element(grid.begin(), grid.end(), by_value);
  minima.push_back({lowest_seed.value, canonicalize(lowest_seed.angles)});

  double best = minima.front().value;
  for (const Seed& m : minima) best = std::min(best, m.value);
  const Seed* chosen = nullptr;
  for (const Seed& m : minima) {
    if (m.value > best + kTieTolerance) continue;
    const auto key = std::tie(m.angles.alpha, m.angles.beta, m.angles.gamma);
    if (chosen == nullptr || key < std::tie(chosen->angles.alpha, chosen->angles.beta, chosen->angles.gamma)) {
      chosen = &m;
    }
  }
  out.angles = chosen->angles;
  out.overlap = std::clamp(objective(blocks, out.angles), 0.0, ceiling);
  return out;
}

}  // namespace qpol
