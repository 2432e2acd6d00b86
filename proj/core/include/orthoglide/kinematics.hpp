#ifndef ORTHOGLIDE_KINEMATICS_HPP
#define ORTHOGLIDE_KINEMATICS_HPP

#include <array>

#include "orthoglide/model.hpp"

namespace orthoglide {

enum class JointLimits { Ignore, Enforce };

// Closed-form inverse kinematics.  For each leg i (axis coordinate p_i,
// transverse coordinates p_j, p_k):
//
//     rho_i = p_i - e - a - sqrt(L^2 - p_j^2 - p_k^2)
//
// The square-root branch keeps the link's own-axis component nonnegative,
// which is the assembly mode covering the workspace.  Throws OutOfReach
// when a radicand is negative, JointLimit when limits are enforced and a
// stroke leaves [rho_min, rho_max].
std::array<double, 3> inverse_kinematics(const MechanismGeometry& geom,
                                         const Vec3& p,
                                         JointLimits limits = JointLimits::Enforce);

// Forward kinematics by trilateration of the three spheres
// |p - (e + a + rho_i) n_i| = L.  Pairwise subtraction reduces the system
// to one quadratic in |p|^2; of the two intersection points the one in the
// working assembly mode (all link axis-components >= 0 and det A > 0) is
// returned, Newton-polished to full precision.  Throws NoSolution when the
// spheres do not yield a working pose and Degenerate when the solution set
// is not isolated (two or more sphere centers at the origin).
Vec3 forward_kinematics(const MechanismGeometry& geom,
                        const std::array<double, 3>& rho);

// Link direction and (theta, beta) of each leg at p, in the cyclic
// convention of model.hpp.  Propagates inverse-kinematics errors.
std::array<LegPosture, 3> leg_postures(const MechanismGeometry& geom,
                                       const Vec3& p);

// A, B = diag(eta), and J_inv = B^-1 A at p (reach check only, no stroke
// limits).  When some |eta_i| < 1e-10 L the set is flagged serial_singular
// and J_inv is left unset.
JacobianSet jacobians(const MechanismGeometry& geom, const Vec3& p);

struct PoseState {
  Vec3 p;
  std::array<LegPosture, 3> legs;
  JacobianSet jacobians;
};

PoseState pose_state(const MechanismGeometry& geom, const Vec3& p);

}  // namespace orthoglide

#endif  // ORTHOGLIDE_KINEMATICS_HPP
