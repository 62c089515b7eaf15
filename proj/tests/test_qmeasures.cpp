#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "qpol/channel.hpp"
#include "qpol/kernels.hpp"
#include "qpol/qmeasures.hpp"
#include "qpol/sampling.hpp"

using namespace qpol;

TEST_CASE("sphere grid") {
  const SphereGrid g(4);
  CHECK(g.total_weight() == doctest::Approx(4 * kPi).epsilon(1e-14));
  double w = 0.0;
  for (const auto& node : g.nodes()) w += node.weight * std::cos(node.theta) * std::cos(node.theta);
  CHECK(w == doctest::Approx(4 * kPi / 3).epsilon(1e-13));
}

TEST_CASE("coherent amplitudes") {
  Sampler rng(61);
  for (int n = 0; n <= 8; ++n) {
    const SphereDirection d = rng.direction();
    const CVector ref = oracle::coherent(n, d.theta, d.phi);
    CHECK((coherent_amplitudes(n, d) - ref).cwiseAbs().maxCoeff() < 1e-13);
    CHECK(su2_coherent(n, d).manifold(n).norm() == doctest::Approx(1.0));
  }
}

TEST_CASE("Q function values") {
  Sampler rng(62);
  for (int i = 0; i < 20; ++i) {
    const BlockDensity b = rng.block_density(5);
    const SphereDirection d = rng.direction();
    CHECK(q_function(b, d) == doctest::Approx(oracle::husimi(b, d.theta, d.phi)).epsilon(1e-12));
  }
  const BlockDensity u = unpolarized_state({{{0, 0.5}, {3, 0.5}}});
  CHECK(q_function(u, {0.4, 1.1}) == doctest::Approx(1 / (4 * kPi)).epsilon(1e-13));
}

TEST_CASE("Q integrals against an independent quadrature") {
  Sampler rng(63);
  for (int i = 0; i < 30; ++i) {
    const BlockDensity b = rng.block_density(6);
    const QIntegrals q = q_integrals(b);
    const oracle::SphereMoments ref = oracle::sphere_moments(b);
    CHECK(std::abs(q.integral - 1.0) < 1e-10);
    CHECK(q.squared_integral == doctest::Approx(ref.squared).epsilon(1e-11));
  }
}

TEST_CASE("Q integrals do not depend on the kernel backend") {
  using namespace qpol::kernels;
  Sampler rng(64);
  const BlockDensity b = rng.block_density(6);
  const Backend original = active_backend();
  set_active_backend(Backend::scalar);
  const QIntegrals scalar_result = q_integrals(b);
  if (backend_supported(Backend::avx2)) {
    set_active_backend(Backend::avx2);
    const QIntegrals fast = q_integrals(b);
    CHECK(fast.squared_integral == doctest::Approx(scalar_result.squared_integral).epsilon(1e-13));
  }
  set_active_backend(original);
}

TEST_CASE("P_Q of coherent states") {
  Sampler rng(65);
  for (int n = 0; n <= 8; ++n) {
    const double expected = std::pow(n / (n + 1.0), 2);
    CHECK(std::abs(degree_q(su2_coherent(n, rng.direction())) - expected) < 1e-8);
  }
}

TEST_CASE("dispersion of two-component superpositions") {
  // Q of |N,0>+|N',0> concentrates at one pole, |N,0>+|0,N'> at both.
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 5}}) {
    const BlockDensity one = block_diagonalize(make_pure({{{n, n}, 1.0}, {{m, m}, 1.0}}));
    const BlockDensity two = block_diagonalize(make_pure({{{n, n}, 1.0}, {{m, 0}, 1.0}}));
    CHECK(dispersion_q(one) == doctest::Approx(4 * kPi * oracle::sphere_moments(one).squared - 1).epsilon(1e-10));
    CHECK(dispersion_q(two) == doctest::Approx(4 * kPi * oracle::sphere_moments(two).squared - 1).epsilon(1e-10));
  }
  const double four = degree_q(make_pure({{{4, 4}, 1.0}}));
  const double split = degree_q(make_pure({{{4, 4}, 1.0}, {{4, 0}, 1.0}}));
  CHECK(four > split);
}

TEST_CASE("distinguishability") {
  Sampler rng(66);
  for (int n : {1, 3, 5}) {
    for (int i = 0; i < 3; ++i) CHECK(std::abs(degree_d(rng.manifold_state(n)) - 1.0) < 1e-6);
  }
  for (int n = 1; n <= 4; ++n) {
    const BlockDensity u = unpolarized_state({{{n, 1.0}}});
    CHECK(degree_d(u, PdNormalization::raw) == doctest::Approx(std::sqrt(n / (n + 1.0))).epsilon(1e-8));
    CHECK(std::abs(degree_d(u, PdNormalization::purity)) < 1e-8);
  }
  const BlockDensity coherent = block_diagonalize(su2_coherent(2, {0.0, 0.0}));
  const DistinguishabilityResult r = distinguishability(coherent);
  CHECK(r.value <= 1.0);
  CHECK(r.overlap >= 0.0);
}

TEST_CASE("purity degree") {
  Sampler rng(67);
  for (int n = 1; n <= 6; ++n) CHECK(degree_p(rng.manifold_state(n)) == doctest::Approx(1.0));
  CHECK(degree_p(make_pure({{{0, 0}, 1.0}})) == 0.0);
  CHECK(std::abs(degree_p(unpolarized_state(rng.unpolarized_spec(5)))) < 1e-12);
}

TEST_CASE("maximal curves of the Q-based degrees") {
  for (double nbar : {0.0, 0.25, 1.0, 2.5}) {
    CHECK(max_d(nbar) == doctest::Approx(std::sqrt(std::min(nbar, 1.0))));
    CHECK(max_p(nbar) == doctest::Approx(std::min(nbar, 1.0)));
    const BlockDensity mix = adjacent_coherent_mixture(nbar);
    CHECK(mean_photon_number(mix) == doctest::Approx(nbar));
    CHECK(max_q(nbar) == doctest::Approx(degree_q(mix)).epsilon(1e-10));
  }
}
