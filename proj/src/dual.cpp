#include "rulekit/dual.hpp"

#include <cmath>
#include <string>

namespace rulekit {

DualVec3 line_to_dual(const LineR3& line) { return {line.direction, cross(line.foot, line.direction)}; }

DualVec3 require_dual_unit(const DualVec3& x, double tolerance) {
  const double length_defect = std::fabs(norm(x.real) - 1.0);
  const double moment_defect = std::fabs(dot(x.real, x.dual));
  if (length_defect > tolerance || moment_defect > tolerance) {
    throw NotOnDualUnitSphere("dual vector is not on the dual unit sphere (| ||x|| - 1 | = " +
                              std::to_string(length_defect) + ", |<x,x*>| = " + std::to_string(moment_defect) + ")");
  }
  return x;
}

LineR3 dual_to_line(const DualVec3& x, double tolerance) {
  require_dual_unit(x, tolerance);
  return {cross(x.real, x.dual), x.real};
}

}  // namespace rulekit
