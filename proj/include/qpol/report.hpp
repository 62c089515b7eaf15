#pragma once

#include <string>

#include "qpol/qmeasures.hpp"
#include "qpol/states.hpp"
#include "qpol/stokes.hpp"
#include "qpol/su2.hpp"

namespace qpol {

struct ReportOptions {
  PdNormalization pd_normalization = PdNormalization::raw;
  SeedGrid seeds;
};

/// Every degree of one state plus the optimizer diagnostics behind them.
struct DegreeReport {
  int cutoff = 0;
  double mean_photon_number = 0.0;
  StokesMoments stokes;

  double p_s = 0.0;
  double p_hsb = 0.0;
  double p_bb = 0.0;
  double p_cb = 0.0;
  double p_q = 0.0;
  double p_d = 0.0;
  double p_p = 0.0;

  double d_q = 0.0;
  ChernoffResult chernoff;
  PdNormalization pd_normalization = PdNormalization::raw;
  DistinguishabilityResult pd;
};

DegreeReport analyze(const AnyState& state, const ReportOptions& options = {});

std::string report_json(const DegreeReport& report);

}  // namespace qpol
