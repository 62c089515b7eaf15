#pragma once

// Small derivative-free minimizers shared by the optimizers in the library.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

namespace qpol::detail {

template <std::size_t D>
struct SimplexResult {
  std::array<double, D> x{};
  double value = 0.0;
  int evaluations = 0;
};

/// Nelder-Mead with the standard coefficients. Stops when the spread of
/// function values over the simplex drops to f_tolerance or the evaluation
/// budget is spent; after convergence it restarts once from the best vertex
/// to guard against a collapsed simplex.
template <std::size_t D, class F>
SimplexResult<D> nelder_mead(F&& f, const std::array<double, D>& start, double step, double f_tolerance,
                             int max_evaluations) {
  using Point = std::array<double, D>;
  SimplexResult<D> result;
  Point origin = start;

  for (int round = 0; round < 2; ++round) {
    std::array<Point, D + 1> vertex;
    std::array<double, D + 1> value;
    vertex[0] = origin;
    for (std::size_t i = 0; i < D; ++i) {
      vertex[i + 1] = origin;
      vertex[i + 1][i] += step;
    }
    for (std::size_t i = 0; i <= D; ++i) {
      value[i] = f(vertex[i]);
      ++result.evaluations;
    }

    while (result.evaluations < max_evaluations) {
      std::array<std::size_t, D + 1> order;
      for (std::size_t i = 0; i <= D; ++i) order[i] = i;
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return value[a] < value[b]; });
      const std::size_t best = order[0];
      const std::size_t worst = order[D];
      const std::size_t second_worst = order[D - 1];
      if (value[worst] - value[best] <= f_tolerance) break;

      Point centroid{};
      for (std::size_t i = 0; i <= D; ++i) {
        if (i == worst) continue;
        for (std::size_t j = 0; j < D; ++j) centroid[j] += vertex[i][j] / static_cast<double>(D);
      }
      auto along = [&](double t) {
        Point p;
        for (std::size_t j = 0; j < D; ++j) p[j] = centroid[j] + t * (vertex[worst][j] - centroid[j]);
        return p;
      };

      const Point reflected = along(-1.0);
      const double f_reflected = f(reflected);
      ++result.evaluations;
      if (f_reflected < value[best]) {
        const Point expanded = along(-2.0);
        const double f_expanded = f(expanded);
        ++result.evaluations;
        if (f_expanded < f_reflected) {
          vertex[worst] = expanded;
          value[worst] = f_expanded;
        } else {
          vertex[worst] = reflected;
          value[worst] = f_reflected;
        }
        continue;
      }
      if (f_reflected < value[second_worst]) {
        vertex[worst] = reflected;
        value[worst] = f_reflected;
        continue;
      }
      const bool outside = f_reflected < value[worst];
      const Point contracted = along(outside ? -0.5 : 0.5);
      const double f_contracted = f(contracted);
      ++result.evaluations;
      if (f_contracted < (outside ? f_reflected : value[worst])) {
        vertex[worst] = contracted;
        value[worst] = f_contracted;
        continue;
      }
      for (std::size_t i = 0; i <= D; ++i) {
        if (i == best) continue;
        for (std::size_t j = 0; j < D; ++j) vertex[i][j] = vertex[best][j] + 0.5 * (vertex[i][j] - vertex[best][j]);
        value[i] = f(vertex[i]);
        ++result.evaluations;
      }
    }

    const auto best = static_cast<std::size_t>(std::min_element(value.begin(), value.end()) - value.begin());
    if (round == 0 || value[best] < result.value) {
      result.x = vertex[best];
      result.value = value[best];
    }
    origin = result.x;
    step *= 0.1;
  }
  return result;
}

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search for the minimum of a unimodal f on [lo, hi]; the
/// bracket is shrunk until its width is at most tolerance. The endpoints are
/// compared too, so a minimum sitting on the boundary is returned exactly.
template <class F>
ScalarMinimum golden_section(F&& f, double lo, double hi, double tolerance) {
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - ratio * (b - a);
  double d = a + ratio * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tolerance) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = f(d);
    }
  }
  ScalarMinimum out{fc <= fd ? c : d, std::min(fc, fd)};
  for (double edge : {lo, hi}) {
    const double fe = f(edge);
    if (fe < out.value) out = {edge, fe};
  }
  return out;
}

}  // namespace qpol::detail
