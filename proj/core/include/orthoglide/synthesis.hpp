#ifndef ORTHOGLIDE_SYNTHESIS_HPP
#define ORTHOGLIDE_SYNTHESIS_HPP

#include <vector>

#include "orthoglide/model.hpp"

namespace orthoglide {

// Above this bound the Q2 slope approaches the all-links-parallel sphere
// and corner extremality is no longer taken on faith: run
// verify_extremality and treat its verdict as authoritative.
inline constexpr double kPsiMaxCap = 4.0;

// Solves the transmission-factor inequalities along the cube diagonal for
// the admissible slope interval [t_q1, t_q2] around the isotropic point:
//
//     1/psi_max <= 1/|1 + 2t| <= psi_max
//     1/psi_max <= 1/|1 - t|  <= psi_max
//
// Closed forms: t_q1 = -(psi_max - 1)/(2 psi_max) always;
// t_q2 = (psi_max - 1)/2 for psi_max <= 2, else (psi_max - 1)/psi_max.
// A bisection solve of the same inequalities cross-checks both closed
// forms to 1e-8 on every call.  Throws DegenerateRequirement for
// psi_max <= 1 and UnsupportedRange above the cap.
JointLimitSolution joint_limits(double psi_max);

// Numeric reference solution used for the cross-check; exposed so tests
// can compare it with the closed forms directly.
struct DiagonalSlopeInterval {
  double t_q1 = 0.0;
  double t_q2 = 0.0;
};
DiagonalSlopeInterval joint_limit_bisection(double psi_max);

// Sizes a machine for a prescribed cube and transmission bound.  With
// tau(t) = t/sqrt(1 + 2 t^2) = sin of the diagonal inclination magnitude:
//
//     L       = workspace_edge / (tau(t_q2) - tau(t_q1))
//     q1      = L tau(t_q1),   q2 = L tau(t_q2)
//     a       = q1 - e - L
//     rho_max = q2 - a - sqrt(L^2 - 2 q2^2) - e,   rho_min = 0
//
// The pipeline is degree-1 homogeneous in workspace_edge.
MechanismGeometry synthesize(const DesignRequirements& req);

// Desk-scale check that the transmission bounds hold over the whole
// prescribed cube and that the binding extrema sit in the Q1/Q2 corner
// cells, on a grid_n^3 grid.
struct ExtremalityReport {
  struct Violation {
    Vec3 p;
    std::array<double, 3> psi{};
  };

  bool ok = false;
  bool low_resolution = false;   // grid too coarse to mean much
  bool extrema_at_corners = false;
  int grid_n = 0;
  double psi_min_observed = 0.0;
  double psi_max_observed = 0.0;
  Vec3 argmin;
  Vec3 argmax;
  std::vector<Violation> violations;  // capped at 8 entries
};

ExtremalityReport verify_extremality(const MechanismGeometry& geom, double psi_max,
                                     int grid_n);

}  // namespace orthoglide

#endif  // ORTHOGLIDE_SYNTHESIS_HPP
