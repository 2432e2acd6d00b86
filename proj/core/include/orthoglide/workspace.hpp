#ifndef ORTHOGLIDE_WORKSPACE_HPP
#define ORTHOGLIDE_WORKSPACE_HPP

#include <array>
#include <vector>

#include "orthoglide/model.hpp"

namespace orthoglide {

enum class Membership { Inside, OutsideReach, OutsideStroke };

// Workspace membership: Inside iff inverse kinematics succeeds with stroke
// limits enforced.  The verdict separates reach-cylinder violations from
// stroke violations.
Membership contains(const MechanismGeometry& geom, const Vec3& p);

// Probe points on the boundary of the cube [anchor, anchor + edge]^3:
// per_face_n x per_face_n nodes per face.  When a face spans coordinate 0
// the zero cross-lines are added as extra nodes -- the per-leg stroke
// minimum over a face is attained where the transverse coordinates vanish,
// so those are the points that bind.  Deduplicated, sorted, deterministic.
std::vector<Vec3> cube_boundary_points(const Vec3& anchor, double edge, int per_face_n);

struct InclusionResult {
  bool included = false;
  Vec3 first_failure;            // meaningful when !included
  Membership failure_verdict = Membership::Inside;
};

// Checks every boundary probe point of the cube for membership.
InclusionResult cube_inclusion(const MechanismGeometry& geom, double edge,
                               const Vec3& anchor, int per_face_n = 9);

enum class Axis : int { X = 0, Y = 1, Z = 2 };

struct FieldSample {
  Vec3 p;
  std::array<double, 3> psi{};  // ascending; NaN when not Inside
  double kappa = 0.0;
  double det_a_normalized = 0.0;
  std::array<double, 3> rho{};
  Membership verdict = Membership::Inside;
};

// Scalar fields sampled over a cross-section plane.  The in-plane grid
// puts the prescribed-cube corners exactly on nodes and continues the
// spacing outward by floor(grid_n/20) rows of padding per side (about a
// 10% margin).  Samples are stored row-major: the second in-plane axis is
// the outer loop.  Cells outside the workspace keep their verdict and NaN
// quantities.
struct FieldMap {
  Axis plane_axis = Axis::Z;
  double offset = 0.0;
  int grid_n = 0;
  Axis u_axis = Axis::X;          // inner loop
  Axis v_axis = Axis::Y;          // outer loop
  std::vector<double> u_nodes;
  std::vector<double> v_nodes;
  std::vector<FieldSample> samples;  // grid_n * grid_n, v-major
};

FieldMap field_map(const MechanismGeometry& geom, Axis plane_axis, double offset,
                   int grid_n);

}  // namespace orthoglide

#endif  // ORTHOGLIDE_WORKSPACE_HPP
