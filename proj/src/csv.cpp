#include "qpol/csv.hpp"

#include <charconv>

namespace qpol {

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of negative zero
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::general, 12);
  return std::string(buffer, result.ptr);
}

void write_curve_csv(std::ostream& out, const std::vector<MaxCurvePoint>& points, bool header) {
  if (header) out << "nbar,measure,value\n";
  for (const MaxCurvePoint& point : points) {
    out << format_number(point.nbar) << ',' << point.measure << ',' << format_number(point.value) << '\n';
  }
}

}  // namespace qpol
