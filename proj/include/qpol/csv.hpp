#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qpol/degrees.hpp"

namespace qpol {

/// 12 significant digits, '.' as the decimal point regardless of locale.
std::string format_number(double value);

/// Header nbar,measure,value followed by one row per point.
void write_curve_csv(std::ostream& out, const std::vector<MaxCurvePoint>& points, bool header = true);

}  // namespace qpol
