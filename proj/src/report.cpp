#include "qpol/report.hpp"

#include <json.hpp>

#include "qpol/channel.hpp"
#include "qpol/degrees.hpp"

namespace qpol {

DegreeReport analyze(const AnyState& state, const ReportOptions& options) {
  const BlockDensity block = block_diagonalize(state);
  const SpectralSummary spectrum = spectral_summary(block);

  DegreeReport out;
  out.cutoff = block.cutoff();
  out.mean_photon_number = mean_photon_number(block);
  out.stokes = moments(block);
  out.p_s = degree_stokes(out.stokes);
  out.p_hsb = degree_hs(spectrum);
  out.p_bb = degree_bures(spectrum);
  out.chernoff = chernoff(spectrum);
  out.p_cb = out.chernoff.value;
  out.d_q = dispersion_q(block);
  out.p_q = rescale_unbounded(out.d_q);
  out.pd_normalization = options.pd_normalization;
  out.pd = distinguishability(block, options.pd_normalization, options.seeds);
  out.p_d = out.pd.value;
  out.p_p = degree_p(block);
  return out;
}

std::string report_json(const DegreeReport& r) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["cutoff"] = r.cutoff;
  doc["mean_photon_number"] = r.mean_photon_number;
  doc["degrees"] = {{"P_S", r.p_s}, {"P_HSb", r.p_hsb}, {"P_Bb", r.p_bb}, {"P_Cb", r.p_cb},
                    {"P_Q", r.p_q}, {"P_d", r.p_d},     {"P_p", r.p_p}};
  doc["stokes"] = {{"s0", r.stokes.s0},
                   {"vector", {r.stokes.vec[0], r.stokes.vec[1], r.stokes.vec[2]}},
                   {"variances", {r.stokes.var[0], r.stokes.var[1], r.stokes.var[2]}}};
  doc["diagnostics"] = {
      {"D_Q", r.d_q},
      {"chernoff", {{"s_star", r.chernoff.s_star}, {"bracket", r.chernoff.bracket}, {"endpoint", r.chernoff.endpoint}}},
      {"distinguishability",
       {{"normalization", r.pd_normalization == PdNormalization::raw ? "raw" : "purity"},
        {"min_overlap", r.pd.overlap},
        {"angles", {r.pd.angles.alpha, r.pd.angles.beta, r.pd.angles.gamma}},
        {"evaluations", r.pd.evaluations}}}};
  return doc.dump(2);
}

}  // namespace qpol
