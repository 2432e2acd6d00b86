#include "orthoglide/model.hpp"

#include <cmath>

namespace orthoglide {

Vec3 solve3(const Mat3& M, const Vec3& b) {
  double d = M.det();
  Mat3 mx = M, my = M, mz = M;
  for (int i = 0; i < 3; ++i) {
    mx(i, 0) = b[i];
    my(i, 1) = b[i];
    mz(i, 2) = b[i];
  }
  return {mx.det() / d, my.det() / d, mz.det() / d};
}

CanonicalFrame canonical_frame() {
  return {{leg_axis(0), leg_axis(1), leg_axis(2)}, Vec3{0.0, 0.0, 0.0}};
}

std::vector<std::string> geometry_issues(const MechanismGeometry& g) {
  std::vector<std::string> issues;
  const double L = g.leg_length;
  if (!(L > 0.0)) issues.push_back("leg_length must be positive");
  if (g.tool_offset < 0.0) issues.push_back("tool_offset must be >= 0");
  if (g.rho_min != 0.0) issues.push_back("rho_min must be 0");
  if (!(g.rho_max > g.rho_min)) issues.push_back("rho_max must exceed rho_min");
  if (!(g.q2 > g.q1)) issues.push_back("q2 must exceed q1");
  if (L > 0.0) {
    double a_expected = g.q1 - g.tool_offset - L;
    if (std::abs(g.base_offset - a_expected) > kGeomRelTol * L)
      issues.push_back("base_offset inconsistent with q1 - e - L");
    // Both prescribed-cube corners must sit strictly inside |p| = L.
    if (g.cube_lo().norm() >= L) issues.push_back("Q1 corner outside sphere of radius L");
    if (g.cube_hi().norm() >= L) issues.push_back("Q2 corner outside sphere of radius L");
  }
  return issues;
}

}  // namespace orthoglide
