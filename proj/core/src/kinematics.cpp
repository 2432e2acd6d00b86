#include "orthoglide/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

namespace orthoglide {

namespace {

// Link vector c_i - b_i = p - (e + a + rho_i) n_i for one leg.
Vec3 link_vector(const MechanismGeometry& g, const Vec3& p, int leg, double rho) {
  Vec3 v = p;
  v[leg] -= g.tool_offset + g.base_offset + rho;
  return v;
}

double reach_radicand(const MechanismGeometry& g, const Vec3& p, int leg) {
  int j = (leg + 1) % 3, k = (leg + 2) % 3;
  return g.leg_length * g.leg_length - p[j] * p[j] - p[k] * p[k];
}

}  // namespace

std::array<double, 3> inverse_kinematics(const MechanismGeometry& g, const Vec3& p,
                                         JointLimits limits) {
  const double L = g.leg_length;
  const double tol = kGeomRelTol * L;
  std::array<double, 3> rho{};
  for (int i = 0; i < 3; ++i) {
    double rad = reach_radicand(g, p, i);
    if (rad < -tol * L)
      throw Error(ErrorCode::OutOfReach,
                  "leg " + std::to_string(i + 1) + ": point outside reach cylinder");
    rho[i] = p[i] - g.tool_offset - g.base_offset - std::sqrt(std::max(rad, 0.0));
  }
  if (limits == JointLimits::Enforce) {
    for (int i = 0; i < 3; ++i) {
      if (rho[i] < g.rho_min - tol || rho[i] > g.rho_max + tol)
        throw Error(ErrorCode::JointLimit,
                    "leg " + std::to_string(i + 1) + ": stroke " + std::to_string(rho[i]) +
                        " outside [" + std::to_string(g.rho_min) + ", " +
                        std::to_string(g.rho_max) + "]");
    }
  }
  return rho;
}

Vec3 forward_kinematics(const MechanismGeometry& g, const std::array<double, 3>& rho) {
  const double L = g.leg_length;
  const double L2 = L * L;
  // Sphere center coordinate along each axis.
  std::array<double, 3> d{};
  int zero_centers = 0;
  for (int i = 0; i < 3; ++i) {
    d[i] = g.tool_offset + g.base_offset + rho[i];
    if (std::abs(d[i]) < 1e-12 * L) ++zero_centers;
  }
  if (zero_centers >= 2)
    throw Error(ErrorCode::Degenerate,
                "two or more sphere centers coincide at the origin: solutions form a curve");

  // With S = |p|^2, each sphere gives p_i = (S + d_i^2 - L^2) / (2 d_i);
  // substituting into S = sum p_i^2 yields a quadratic in S.
  auto point_for = [&](double S) -> std::optional<Vec3> {
    Vec3 p;
    double rem = S;
    int free_axis = -1;
    for (int i = 0; i < 3; ++i) {
      if (std::abs(d[i]) < 1e-12 * L) {
        free_axis = i;
        continue;
      }
      p[i] = (S + d[i] * d[i] - L2) / (2.0 * d[i]);
      rem -= p[i] * p[i];
    }
    if (free_axis >= 0) {
      if (rem < -1e-9 * L2) return std::nullopt;
      p[free_axis] = std::sqrt(std::max(rem, 0.0));  // eta >= 0 branch
    }
    return p;
  };

  std::array<Vec3, 2> candidates;
  int n_candidates = 0;
  if (zero_centers == 1) {
    // The zero-center sphere pins S = L^2 directly.
    if (auto p = point_for(L2)) candidates[n_candidates++] = *p;
  } else {
    double qa = 0.0, qb = -1.0, qc = 0.0;
    for (int i = 0; i < 3; ++i) {
      double gi = d[i] * d[i] - L2;
      double w = 1.0 / (4.0 * d[i] * d[i]);
      qa += w;
      qb += 2.0 * gi * w;
      qc += gi * gi * w;
    }
    double disc = qb * qb - 4.0 * qa * qc;
    double scale = qb * qb + std::abs(4.0 * qa * qc);
    if (disc < -1e-12 * scale)
      throw Error(ErrorCode::NoSolution, "spheres do not intersect");
    disc = std::max(disc, 0.0);
    // Stable quadratic roots.
    double q = -0.5 * (qb + std::copysign(std::sqrt(disc), qb));
    std::array<double, 2> roots{q / qa, (q != 0.0) ? qc / q : 0.0};
    for (double S : roots) {
      if (S < -1e-9 * L2) continue;
      if (auto p = point_for(std::max(S, 0.0))) candidates[n_candidates++] = *p;
    }
  }

  // Working assembly mode: all link axis-components >= 0 and det A > 0.
  // The mirror intersection point has det A < 0.
  const double eta_tol = -1e-9 * L;
  Vec3 best;
  bool found = false;
  double best_det = 0.0;
  for (int c = 0; c < n_candidates; ++c) {
    const Vec3& p = candidates[c];
    double min_eta = 1e300;
    Mat3 A;
    for (int i = 0; i < 3; ++i) {
      Vec3 link = p;
      link[i] -= d[i];
      A.set_row(i, link);
      min_eta = std::min(min_eta, link[i]);
    }
    if (min_eta < eta_tol) continue;
    double det = A.det();
    if (!found || det > best_det) {
      best = p;
      best_det = det;
      found = true;
    }
  }
  // det == 0 is kept: a tangent (singular) pose is still a pose.
  if (!found || best_det < -1e-12 * L2 * L)
    throw Error(ErrorCode::NoSolution, "no pose in the working assembly mode");

  // Newton polish on F_i = (|p - d_i n_i|^2 - L^2)/2; Jacobian rows are the
  // link vectors, i.e. exactly A.
  for (int it = 0; it < 3; ++it) {
    Mat3 A;
    Vec3 F;
    for (int i = 0; i < 3; ++i) {
      Vec3 link = best;
      link[i] -= d[i];
      A.set_row(i, link);
      F[i] = 0.5 * (link.squared_norm() - L2);
    }
    if (std::abs(A.det()) < 1e-9 * L2 * L) break;  // singular pose, keep algebraic root
    best = best - solve3(A, F);
  }
  return best;
}

std::array<LegPosture, 3> leg_postures(const MechanismGeometry& g, const Vec3& p) {
  auto rho = inverse_kinematics(g, p, JointLimits::Ignore);
  const double L = g.leg_length;
  std::array<LegPosture, 3> legs;
  for (int i = 0; i < 3; ++i) {
    Vec3 u = link_vector(g, p, i, rho[i]) / L;
    int j = (i + 1) % 3, k = (i + 2) % 3;
    legs[i].rho = rho[i];
    legs[i].link_dir = u;
    legs[i].theta = std::atan2(u[j], u[i]);
    legs[i].beta = -std::asin(std::clamp(u[k], -1.0, 1.0));
  }
  return legs;
}

JacobianSet jacobians(const MechanismGeometry& g, const Vec3& p) {
  auto rho = inverse_kinematics(g, p, JointLimits::Ignore);
  const double L = g.leg_length;
  JacobianSet set;
  for (int i = 0; i < 3; ++i) {
    Vec3 link = link_vector(g, p, i, rho[i]);
    set.A.set_row(i, link);
    set.eta[i] = link[i];
    set.serial_leg[i] = std::abs(set.eta[i]) < kSerialTol * L;
    set.serial_singular = set.serial_singular || set.serial_leg[i];
  }
  if (!set.serial_singular) {
    for (int i = 0; i < 3; ++i) set.J_inv.set_row(i, set.A.row(i) / set.eta[i]);
  }
  return set;
}

PoseState pose_state(const MechanismGeometry& g, const Vec3& p) {
  return {p, leg_postures(g, p), jacobians(g, p)};
}

}  // namespace orthoglide
