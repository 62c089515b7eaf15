#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "optimize.hpp"
#include "qpol/degrees.hpp"

namespace qpol {

namespace {

double degree_of(DistanceMeasure measure, const SpectralSummary& spectrum) {
  switch (measure) {
    case DistanceMeasure::hs:
      return degree_hs(spectrum);
    case DistanceMeasure::bures:
      return degree_bures(spectrum);
    case DistanceMeasure::chernoff:
      return degree_chernoff(spectrum);
  }
  return 0.0;
}

}  // namespace

double max_hs(double nbar) {
  const double lo = std::floor(nbar);
  const double hi = std::ceil(nbar);
  if (nbar <= std::sqrt(lo * (lo + 2.0))) return lo / (lo + 1.0);
  return nbar * nbar / (hi * (hi + 1.0));
}

double max_bures(double nbar) {
  const double hi = std::ceil(nbar);
  if (hi <= 0.0) return 0.0;
  return 1.0 - std::sqrt((2.0 * hi - nbar) / (hi * (hi + 1.0)));
}

double max_chernoff(double nbar) {
  // Mixture of pure blocks in manifolds ceil(nbar)-1 and ceil(nbar).
  const int hi = static_cast<int>(std::ceil(nbar));
  std::vector<std::pair<int, double>> distribution;
  if (hi >= 1) distribution.emplace_back(hi - 1, hi - nbar);
  distribution.emplace_back(hi, 1.0 + nbar - hi);
  return degree_chernoff(pure_spectrum(distribution));
}

double max_distance_degree(DistanceMeasure measure, double nbar) {
  switch (measure) {
    case DistanceMeasure::hs:
      return max_hs(nbar);
    case DistanceMeasure::bures:
      return max_bures(nbar);
    case DistanceMeasure::chernoff:
      return max_chernoff(nbar);
  }
  return 0.0;
}

std::string measure_tag(DistanceMeasure measure) {
  switch (measure) {
    case DistanceMeasure::hs:
      return "hsb";
    case DistanceMeasure::bures:
      return "bb";
    case DistanceMeasure::chernoff:
      return "cb";
  }
  return "";
}

std::vector<MaxCurvePoint> max_curve(DistanceMeasure measure, const std::vector<double>& nbar_grid) {
  std::vector<MaxCurvePoint> out;
  out.reserve(nbar_grid.size());
  for (double nbar : nbar_grid) out.push_back({nbar, max_distance_degree(measure, nbar), measure_tag(measure)});
  return out;
}

double max_curve_verify(DistanceMeasure measure, double nbar, const MaxCurveBudget& budget) {
  const int lo = static_cast<int>(std::floor(nbar));
  const int hi = static_cast<int>(std::ceil(nbar));
  const int top = hi + (measure == DistanceMeasure::hs ? budget.hs_cap_offset : budget.extra_manifolds);
  const int bottom = std::max(0, lo - 1);

  auto evaluate = [&](const std::vector<std::pair<int, double>>& distribution) {
    return degree_of(measure, pure_spectrum(distribution));
  };

  double best = 0.0;
  if (lo == hi) best = evaluate({{lo, 1.0}});
  // Pairs a < b bracketing nbar fix both weights. The vacuum is always allowed
  // as the light manifold.
  for (int a = 0; a <= lo; ++a) {
    if (a != 0 && a < bottom) continue;
    for (int b = std::max(a + 1, hi); b <= top; ++b) {
      if (static_cast<double>(a) > nbar || static_cast<double>(b) < nbar) continue;
      const double pb = (nbar - a) / (b - a);
      best = std::max(best, evaluate({{a, 1.0 - pb}, {b, pb}}));
    }
  }
  if (!budget.triples) return best;

  // Triples a < b < c: one free weight left after the two constraints.
  for (int a = bottom; a <= top; ++a) {
    for (int b = a + 1; b <= top; ++b) {
      for (int c = b + 1; c <= top; ++c) {
        if (static_cast<double>(a) > nbar || static_cast<double>(c) < nbar) continue;
        // Weights with pb = t: pa + pc = 1 - t, a pa + c pc = nbar - b t.
        auto weights = [&](double t) -> std::array<double, 3> {
          const double pc = (nbar - b * t - a * (1.0 - t)) / (c - a);
          return {1.0 - t - pc, t, pc};
        };
        // Feasible t keeps pa and pc non-negative.
        double t_lo = 0.0;
        double t_hi = 1.0;
        // pc >= 0  <=>  t (b - a) <= nbar - a
        t_hi = std::min(t_hi, (nbar - a) / (b - a));
        // pa >= 0  <=>  t (c - b) <= c - nbar
        t_hi = std::min(t_hi, (c - nbar) / (c - b));
        if (t_hi <= t_lo) continue;
        auto score = [&](double t) {
          const auto w = weights(t);
          std::vector<std::pair<int, double>> distribution;
          if (w[0] > 0.0) distribution.emplace_back(a, w[0]);
          if (w[1] > 0.0) distribution.emplace_back(b, w[1]);
          if (w[2] > 0.0) distribution.emplace_back(c, w[2]);
          return evaluate(distribution);
        };
        int best_i = 0;
        double best_here = -1.0;
        for (int i = 0; i <= budget.weight_grid; ++i) {
          const double value = score(t_lo + (t_hi - t_lo) * i / budget.weight_grid);
          if (value > best_here) {
            best_here = value;
            best_i = i;
          }
        }
        const double step = (t_hi - t_lo) / budget.weight_grid;
        const double left = std::max(t_lo, t_lo + step * (best_i - 1));
        const double right = std::min(t_hi, t_lo + step * (best_i + 1));
        const auto refined = detail::golden_section([&](double t) { return -score(t); }, left, right, 1e-9);
        best = std::max({best, best_here, -refined.value});
      }
    }
  }
  return best;
}

}  // namespace qpol
