#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "qpol/sampling.hpp"
#include "qpol/su2.hpp"

using namespace qpol;

TEST_CASE("rotation matrices equal matrix exponentials") {
  Sampler rng(21);
  for (int n = 0; n <= 7; ++n) {
    for (int i = 0; i < 5; ++i) {
      const EulerAngles a = rng.angles();
      const CMatrix u = rotation_matrix(n, a);
      CHECK(oracle::max_abs(u - oracle::rotation(n, a.alpha, a.beta, a.gamma)) < 1e-11);
    }
  }
}

TEST_CASE("single photon rotation") {
  const double b = 0.37;
  const CMatrix u = rotation_matrix(1, {0.0, b, 0.0});
  CHECK(std::abs(u(0, 0) - std::cos(b)) < 1e-15);
  CHECK(std::abs(u(0, 1) - std::sin(b)) < 1e-15);
  CHECK(std::abs(u(1, 0) + std::sin(b)) < 1e-15);
}

TEST_CASE("canonical angles give the same matrices") {
  Sampler rng(22);
  for (int i = 0; i < 30; ++i) {
    const EulerAngles raw{rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-10, 10)};
    const EulerAngles c = canonicalize(raw);
    CHECK(c.alpha >= 0.0);
    CHECK(c.alpha < 2 * kPi);
    CHECK(c.beta >= 0.0);
    CHECK(c.beta <= kPi);
    CHECK(c.gamma >= 0.0);
    CHECK(c.gamma < 2 * kPi);
    for (int n = 1; n <= 4; ++n) CHECK(oracle::max_abs(rotation_matrix(n, raw) - rotation_matrix(n, c)) < 1e-11);
  }
}

TEST_CASE("overlap objective is one at the identity") {
  Sampler rng(23);
  for (int i = 0; i < 10; ++i) {
    const BlockDensity b = rng.pure_block_density(4);
    CHECK(overlap_objective(b, {}) == doctest::Approx(1.0));
  }
}

TEST_CASE("|1,1> can be rotated to an orthogonal state") {
  const BlockDensity b = pure_to_block(make_pure({{{2, 1}, 1.0}}));
  const OverlapSearch r = min_overlap_search(b);
  CHECK(r.overlap <= 1e-9);
  CHECK(overlap_objective(b, r.angles) == doctest::Approx(r.overlap).epsilon(1e-12));
}

TEST_CASE("a single photon can be rotated to an orthogonal state") {
  const BlockDensity one = pure_to_block(make_pure({{{1, 0}, 1.0}}));
  CHECK(min_overlap_search(one).overlap <= 1e-9);
}
