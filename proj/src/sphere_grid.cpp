#include <cmath>
#include <memory>

#include <gsl/gsl_integration.h>

#include "qpol/qmeasures.hpp"

namespace qpol {

SphereGrid::SphereGrid(int cutoff) : SphereGrid(2 * cutoff + 2, 4 * cutoff + 2) {}

SphereGrid::SphereGrid(int polar_nodes, int azimuthal_nodes) {
  if (polar_nodes < 1 || azimuthal_nodes < 1) throw Error("sphere grid needs at least one node per direction");
  const std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)> table(
      gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(polar_nodes)), gsl_integration_glfixed_table_free);
  if (!table) throw Error("Gauss-Legendre table allocation failed");
  for (int i = 0; i < polar_nodes; ++i) {
    double x = 0.0;
    double w = 0.0;
    gsl_integration_glfixed_point(-1.0, 1.0, static_cast<std::size_t>(i), &x, &w, table.get());
    cos_theta_.push_back(x);
    polar_weights_.push_back(w);
  }
  azimuthal_weight_ = 2.0 * kPi / azimuthal_nodes;
  for (int j = 0; j < azimuthal_nodes; ++j) phi_.push_back(azimuthal_weight_ * j);
}

std::vector<SphereGrid::Node> SphereGrid::nodes() const {
  std::vector<Node> out;
  for (std::size_t i = 0; i < cos_theta_.size(); ++i) {
    for (double phi : phi_) out.push_back({std::acos(cos_theta_[i]), phi, polar_weights_[i] * azimuthal_weight_});
  }
  return out;
}

double SphereGrid::total_weight() const {
  double polar = 0.0;
  for (double w : polar_weights_) polar += w;
  return polar * azimuthal_weight_ * static_cast<double>(phi_.size());
}

}  // namespace qpol
