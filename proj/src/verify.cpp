#include "qpol/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "qpol/channel.hpp"
#include "qpol/csv.hpp"
#include "qpol/degrees.hpp"
#include "qpol/qmeasures.hpp"
#include "qpol/sampling.hpp"
#include "qpol/stokes.hpp"
#include "qpol/su2.hpp"
#include "qpol/unpolarized.hpp"

namespace qpol {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}

  // Passes when worst <= tolerance.
  void bound(const std::string& check, double worst, double tolerance) {
    results_.push_back({name_, check, worst <= tolerance, "worst=" + format_number(worst)});
  }
  void flag(const std::string& check, bool ok, const std::string& detail) {
    results_.push_back({name_, check, ok, detail});
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string name_;
  std::vector<CheckResult> results_;
};

double max_block_diff(const BlockDensity& a, const BlockDensity& b) { return block_deviation(a, b); }

std::vector<CheckResult> stokes_suite(Sampler& rng, int samples) {
  Suite s("stokes");
  double commutator = 0.0;
  double casimir = 0.0;
  for (int n = 0; n <= 12; ++n) {
    commutator = std::max(commutator, commutator_check(n));
    casimir = std::max(casimir, casimir_check(n));
  }
  s.bound("commutators n<=12", commutator, 1e-12);
  s.bound("casimir n<=12", casimir, 1e-10);

  double violation = 0.0;
  double invariance = 0.0;
  for (int i = 0; i < samples; ++i) {
    const TwoModeState state = rng.pure_state(rng.integer(0, 8));
    const UncertaintyCheck u = uncertainty_check(state);
    violation = std::max(violation, u.rhs - u.lhs);
    const TwoModeState small = rng.pure_state(rng.integer(0, 5));
    invariance = std::max(invariance, std::abs(degree_stokes(transform(small, rng.angles())) - degree_stokes(small)));
  }
  s.bound("uncertainty relation", violation, 1e-9);
  s.bound("P_S invariance", invariance, 1e-9);

  double coherent = 0.0;
  for (int i = 0; i < samples; ++i) {
    coherent = std::max(coherent, std::abs(degree_stokes(su2_coherent(rng.integer(1, 8), rng.direction())) - 1.0));
  }
  s.bound("P_S coherent = 1", coherent, 1e-10);
  return s.take();
}

std::vector<CheckResult> su2_suite(Sampler& rng, int samples) {
  Suite s("su2");
  double unitarity = 0.0;
  for (int n = 0; n <= 10; ++n) {
    for (int i = 0; i < samples; ++i) {
      const CMatrix u = rotation_matrix(n, rng.angles());
      unitarity = std::max(unitarity, (u.adjoint() * u - CMatrix::Identity(n + 1, n + 1)).cwiseAbs().maxCoeff());
    }
  }
  s.bound("unitarity n<=10", unitarity, 1e-11);

  double closed = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double beta = rng.uniform(-2.0 * kPi, 2.0 * kPi);
    CMatrix expected(2, 2);
    expected << std::cos(beta), std::sin(beta), -std::sin(beta), std::cos(beta);
    closed = std::max(closed, (rotation_matrix(1, {0.0, beta, 0.0}) - expected).cwiseAbs().maxCoeff());
  }
  s.bound("single-photon closed form", closed, 1e-12);

  double group = 0.0;
  double unpolarized = 0.0;
  double spectrum = 0.0;
  double canonical = 0.0;
  for (int i = 0; i < samples; ++i) {
    const BlockDensity state = rng.block_density(5);
    const EulerAngles g1 = rng.angles();
    const EulerAngles g2 = rng.angles();
    const BlockDensity twice = transform(transform(state, g1), g2);
    for (const Block& b : state.blocks()) {
      const CMatrix u = rotation_matrix(b.n, g2) * rotation_matrix(b.n, g1);
      group = std::max(group, (twice.find(b.n)->rho - u * b.rho * u.adjoint()).cwiseAbs().maxCoeff());
      const auto before = spectral_summary(BlockDensity({{b.n, 1.0, b.rho}}));
      const auto after = spectral_summary(BlockDensity({{b.n, 1.0, twice.find(b.n)->rho}}));
      for (std::size_t k = 0; k < before[0].eigenvalues.size(); ++k) {
        spectrum = std::max(spectrum, std::abs(before[0].eigenvalues[k] - after[0].eigenvalues[k]));
      }
    }
    const BlockDensity sigma = unpolarized_state(rng.unpolarized_spec(6));
    unpolarized = std::max(unpolarized, max_block_diff(transform(sigma, g1), sigma));
    const EulerAngles wild{rng.uniform(-20.0, 20.0), rng.uniform(-20.0, 20.0), rng.uniform(-20.0, 20.0)};
    const int n = rng.integer(0, 6);
    canonical = std::max(
        canonical, (rotation_matrix(n, wild) - rotation_matrix(n, canonicalize(wild))).cwiseAbs().maxCoeff());
  }
  s.bound("group action", group, 1e-10);
  s.bound("unpolarized invariance", unpolarized, 1e-11);
  s.bound("spectrum preservation", spectrum, 1e-10);
  s.bound("canonical angles", canonical, 1e-10);

  const auto search = min_overlap_search(pure_to_block(make_pure({{{2, 1}, 1.0}})));
  s.bound("|1,1> min overlap", search.overlap, 1e-9);
  return s.take();
}

std::vector<CheckResult> channel_suite(Sampler& rng, int samples) {
  Suite s("channel");
  bool idempotent = true;
  bool distribution = true;
  double commute = 0.0;
  for (int i = 0; i < samples; ++i) {
    const TwoModeState state = rng.pure_state(rng.integer(0, 5));
    const BlockDensity once = block_diagonalize(state);
    idempotent = idempotent && block_deviation(block_diagonalize(once), once) == 0.0;
    const auto expected = photon_distribution(state);
    const auto got = photon_distribution(once);
    distribution = distribution && expected == got;
    const EulerAngles g = rng.angles();
    commute = std::max(commute, block_deviation(block_diagonalize(transform(state, g)), transform(once, g)));
  }
  s.flag("idempotence", idempotent, idempotent ? "exact" : "mismatch");
  s.flag("distribution preserved", distribution, distribution ? "exact" : "mismatch");
  s.bound("commutes with SU(2)", commute, 1e-11);

  bool monotone = true;
  for (int i = 0; i < samples; ++i) {
    double x = rng.uniform(0.0, 10.0);
    double y = rng.uniform(0.0, 10.0);
    if (x == y) continue;
    if (x > y) std::swap(x, y);
    monotone = monotone && rescale_unbounded(x) < rescale_unbounded(y);
  }
  s.flag("rescale monotone", monotone, monotone ? "ordered" : "order broken");
  return s.take();
}

std::vector<CheckResult> unpolarized_suite(Sampler& rng, int samples) {
  Suite s("unpolarized");
  int single_photon_certified = 0;
  for (int i = 0; i <= 40; ++i) {
    for (int j = 0; j < 40; ++j) {
      const SphereDirection d{kPi * i / 40.0, 2.0 * kPi * j / 40.0};
      if (is_stokes_unpolarized(su2_coherent(1, d)).certified) ++single_photon_certified;
    }
  }
  s.flag("no unpolarized single-photon state", single_photon_certified == 0,
         "certified=" + std::to_string(single_photon_certified));

  double two_photon = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double a = rng.uniform(0.0, 1.0 / std::sqrt(2.0));
    const double theta = rng.uniform(0.0, 2.0 * kPi);
    const auto cert = is_stokes_unpolarized(two_photon_family(a, theta));
    const auto closed = two_photon_variances(a, theta);
    for (int k = 0; k < 3; ++k) two_photon = std::max(two_photon, std::abs(cert.variances[k] - closed[k]));
    if (!cert.certified) two_photon = std::max(two_photon, 1.0);
  }
  s.bound("two-photon variances", two_photon, 1e-10);

  double residual = 0.0;
  double paths = 0.0;
  double sum_law = 0.0;
  double three_closed = 0.0;
  double mirror = 0.0;
  for (int n : {2, 3, 4, 5, 6}) {
    for (int i = 0; i < samples; ++i) {
      const TwoModeState state = rng.unpolarized_pure(n);
      const auto cert = is_stokes_unpolarized(state);
      residual = std::max({residual, std::abs(cert.sx), std::abs(cert.sy), std::abs(cert.sz)});
      paths = std::max(paths, cert.path_disagreement);
      sum_law = std::max(sum_law, std::abs(cert.variances[0] + cert.variances[1] + cert.variances[2] - n * (n + 2.0)));
      if (n == 3) {
        const auto closed = three_photon_variances(state);
        for (int k = 0; k < 3; ++k) three_closed = std::max(three_closed, std::abs(cert.variances[k] - closed[k]));
      }
      const auto mirrored = is_stokes_unpolarized(mirror_state(state));
      mirror = std::max({mirror, std::abs(mirrored.sx), std::abs(mirrored.sy), std::abs(mirrored.sz)});
    }
  }
  s.bound("family certification", residual, 1e-10);
  s.bound("dual-path agreement", paths, 1e-12);
  s.bound("variance sum N(N+2)", sum_law, 1e-9);
  s.bound("three-photon variances", three_closed, 1e-10);
  s.bound("mirror certification", mirror, 1e-10);

  const bool vertices = sail_region(0.0, 0.0).zone == SailZone::on_border &&
                        sail_region(1.0 / std::sqrt(2.0), 0.0).zone == SailZone::on_border &&
                        sail_region(0.5, std::sqrt(3.0) / 2.0).zone == SailZone::on_border;
  s.flag("sail vertices on border", vertices, vertices ? "on border" : "misclassified");
  return s.take();
}

std::vector<CheckResult> degrees_suite(Sampler& rng, int samples) {
  Suite s("degrees");
  double pure = 0.0;
  for (int n = 0; n <= 10; ++n) {
    const BlockDensity state = pure_to_block(rng.manifold_state(n));
    pure = std::max({pure, std::abs(degree_hs(state) - n / (n + 1.0)),
                     std::abs(degree_chernoff(state) - n / (n + 1.0)),
                     std::abs(degree_bures(state) - (1.0 - 1.0 / std::sqrt(n + 1.0)))});
  }
  s.bound("pure N-photon values", pure, 1e-9);

  double ordering = 0.0;
  double invariance = 0.0;
  double unpolarized = 0.0;
  for (int i = 0; i < samples; ++i) {
    const BlockDensity state = rng.block_density(6);
    ordering = std::max(ordering, degree_bures(state) - degree_chernoff(state));
    const BlockDensity moved = transform(state, rng.angles());
    invariance = std::max({invariance, std::abs(degree_hs(state) - degree_hs(moved)),
                           std::abs(degree_bures(state) - degree_bures(moved)),
                           std::abs(degree_chernoff(state) - degree_chernoff(moved))});
    const BlockDensity sigma = unpolarized_state(rng.unpolarized_spec(6));
    unpolarized = std::max({unpolarized, degree_hs(sigma), degree_bures(sigma), degree_chernoff(sigma)});
  }
  s.bound("P_Bb <= P_Cb", ordering, 1e-12);
  s.bound("SU(2) invariance", invariance, 1e-9);
  s.bound("unpolarized -> 0", unpolarized, 1e-9);

  double oracle = 0.0;
  const int oracle_samples = std::max(1, samples / 5);
  for (int i = 0; i < oracle_samples; ++i) {
    const BlockDensity state = rng.block_density(4, rng.integer(1, 3));
    oracle = std::max({oracle, std::abs(sup_over_unpolarized(state, DistanceMeasure::hs).degree - degree_hs(state)),
                       std::abs(sup_over_unpolarized(state, DistanceMeasure::bures).degree - degree_bures(state)),
                       std::abs(sup_over_unpolarized(state, DistanceMeasure::chernoff).degree -
                                degree_chernoff(state))});
  }
  s.bound("closed forms vs weight optimization", oracle, 1e-6);

  double integer_points = 0.0;
  for (int n = 0; n <= 5; ++n) {
    integer_points = std::max({integer_points, std::abs(max_hs(n) - n / (n + 1.0)),
                               std::abs(max_chernoff(n) - n / (n + 1.0)),
                               std::abs(max_bures(n) - (1.0 - 1.0 / std::sqrt(n + 1.0)))});
  }
  s.bound("max curves at integers", integer_points, 1e-9);
  return s.take();
}

std::vector<CheckResult> qmeasures_suite(Sampler& rng, int samples) {
  Suite s("qmeasures");
  double normalization = 0.0;
  for (int i = 0; i < samples; ++i) {
    normalization = std::max(normalization, std::abs(q_integrals(rng.block_density(6)).integral - 1.0));
  }
  s.bound("Q normalization", normalization, 1e-10);

  double coherent = 0.0;
  for (int n = 0; n <= 8; ++n) {
    const double expected = std::pow(n / (n + 1.0), 2);
    coherent = std::max(coherent, std::abs(degree_q(su2_coherent(n, rng.direction())) - expected));
  }
  s.bound("P_Q coherent", coherent, 1e-8);

  double fixtures = 0.0;
  for (const auto& [n, m] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 5}}) {
    const double a = n + 1.0;
    const double b = m + 1.0;
    const double psi1 = 0.25 * (a * a / (2 * n + 1) + b * b / (2 * m + 1) + 2.0 * a * b / (n + m + 1)) - 1.0;
    const double psi2 = 0.25 * (a * a / (2 * n + 1) + b * b / (2 * m + 1) +
                                2.0 * std::tgamma(n + 2.0) * std::tgamma(m + 2.0) / std::tgamma(n + m + 2.0)) -
                        1.0;
    const TwoModeState state1 = make_pure({{{n, n}, 1.0}, {{m, m}, 1.0}});
    const TwoModeState state2 = make_pure({{{n, n}, 1.0}, {{m, 0}, 1.0}});
    fixtures = std::max({fixtures, std::abs(dispersion_q(state1) - psi1), std::abs(dispersion_q(state2) - psi2)});
  }
  s.bound("dispersion fixtures", fixtures, 1e-8);

  double odd = 0.0;
  const int pd_samples = std::max(1, samples / 5);
  for (int n : {1, 3}) {
    for (int i = 0; i < pd_samples; ++i) odd = std::max(odd, 1.0 - degree_d(rng.manifold_state(n)));
  }
  s.bound("P_d odd photon number", odd, 1e-6);

  double purity = 0.0;
  for (int i = 0; i < samples; ++i) {
    purity = std::max(purity, std::abs(degree_p(rng.manifold_state(rng.integer(1, 8))) - 1.0));
    purity = std::max(purity, degree_p(unpolarized_state(rng.unpolarized_spec(6))));
  }
  s.bound("P_p pure and unpolarized", purity, 1e-10);
  return s.take();
}

using SuiteFn = std::function<std::vector<CheckResult>(Sampler&, int)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"stokes", stokes_suite},   {"su2", su2_suite},         {"channel", channel_suite},
      {"unpolarized", unpolarized_suite}, {"degrees", degrees_suite}, {"qmeasures", qmeasures_suite}};
  return suites;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : registry()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

std::vector<CheckResult> run_verify(const std::string& suite, const VerifyOptions& options) {
  std::vector<CheckResult> out;
  bool found = false;
  for (std::size_t i = 0; i < registry().size(); ++i) {
    const auto& [name, fn] = registry()[i];
    if (suite != "all" && suite != name) continue;
    found = true;
    // Each suite draws from its own stream so "all" matches the individual runs.
    Sampler rng(options.seed * 1000003ULL + i);
    auto results = fn(rng, std::max(1, options.samples));
    out.insert(out.end(), results.begin(), results.end());
  }
  if (!found) throw Error("unknown verification suite \"" + suite + "\"");
  return out;
}

}  // namespace qpol
