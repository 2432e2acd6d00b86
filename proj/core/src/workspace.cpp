#include "orthoglide/workspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "orthoglide/kinematics.hpp"
#include "orthoglide/kinetostatics.hpp"
#include "orthoglide/singularity.hpp"

namespace orthoglide {

namespace {

std::vector<double> axis_nodes(double lo, double hi, int n) {
  std::vector<double> nodes;
  nodes.reserve(n + 1);
  for (int k = 0; k < n; ++k) nodes.push_back(lo + (hi - lo) * k / (n - 1));
  if (lo < 0.0 && 0.0 < hi) nodes.push_back(0.0);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

}  // namespace

Membership contains(const MechanismGeometry& g, const Vec3& p) {
  try {
    inverse_kinematics(g, p, JointLimits::Enforce);
  } catch (const Error& e) {
    return e.code() == ErrorCode::OutOfReach ? Membership::OutsideReach
                                             : Membership::OutsideStroke;
  }
  return Membership::Inside;
}

std::vector<Vec3> cube_boundary_points(const Vec3& anchor, double edge, int per_face_n) {
  if (per_face_n < 2) throw std::invalid_argument("per_face_n must be >= 2");
  std::vector<Vec3> points;
  std::array<std::vector<double>, 3> nodes;
  for (int a = 0; a < 3; ++a) nodes[a] = axis_nodes(anchor[a], anchor[a] + edge, per_face_n);
  for (int a = 0; a < 3; ++a) {
    int u = (a + 1) % 3, v = (a + 2) % 3;
    for (double side : {anchor[a], anchor[a] + edge})
      for (double cu : nodes[u])
        for (double cv : nodes[v]) {
          Vec3 p;
          p[a] = side;
          p[u] = cu;
          p[v] = cv;
          points.push_back(p);
        }
  }
  auto less = [](const Vec3& a, const Vec3& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  };
  std::sort(points.begin(), points.end(), less);
  points.erase(std::unique(points.begin(), points.end(),
                           [](const Vec3& a, const Vec3& b) {
                             return a.x == b.x && a.y == b.y && a.z == b.z;
                           }),
               points.end());
  return points;
}

InclusionResult cube_inclusion(const MechanismGeometry& g, double edge,
                               const Vec3& anchor, int per_face_n) {
  if (!(edge > 0.0)) throw std::invalid_argument("edge must be positive");
  InclusionResult res;
  for (const Vec3& p : cube_boundary_points(anchor, edge, per_face_n)) {
    Membership m = contains(g, p);
    if (m != Membership::Inside) {
      res.included = false;
      res.first_failure = p;
      res.failure_verdict = m;
      return res;
    }
  }
  res.included = true;
  return res;
}

FieldMap field_map(const MechanismGeometry& g, Axis plane_axis, double offset,
                   int grid_n) {
  if (grid_n < 2) throw std::invalid_argument("field_map: grid_n must be >= 2");

  FieldMap map;
  map.plane_axis = plane_axis;
  map.offset = offset;
  map.grid_n = grid_n;
  const int a = static_cast<int>(plane_axis);
  map.u_axis = static_cast<Axis>(a == 0 ? 1 : 0);
  map.v_axis = static_cast<Axis>(a == 2 ? 1 : 2);

  // Cube corners on nodes, padded outward by ~5% of the nodes per side.
  int pad = grid_n / 20;
  pad = std::min(pad, (grid_n - 2) / 2);
  const int inner = grid_n - 2 * pad;
  const double h = g.workspace_edge() / (inner - 1);
  std::vector<double> nodes(grid_n);
  for (int k = 0; k < grid_n; ++k) nodes[k] = g.q1 + h * (k - pad);
  map.u_nodes = nodes;
  map.v_nodes = nodes;

  const double nan = std::numeric_limits<double>::quiet_NaN();
  map.samples.reserve(static_cast<size_t>(grid_n) * grid_n);
  for (int iv = 0; iv < grid_n; ++iv)
    for (int iu = 0; iu < grid_n; ++iu) {
      FieldSample s;
      s.p[a] = offset;
      s.p[static_cast<int>(map.u_axis)] = map.u_nodes[iu];
      s.p[static_cast<int>(map.v_axis)] = map.v_nodes[iv];
      s.verdict = contains(g, s.p);
      if (s.verdict == Membership::Inside) {
        auto rho = inverse_kinematics(g, s.p, JointLimits::Ignore);
        s.rho = rho;
        s.det_a_normalized = classify(g, s.p).det_a_normalized;
        try {
          TransmissionReport rep = transmission(g, s.p);
          s.psi = rep.psi;
          s.kappa = rep.kappa;
        } catch (const Error&) {  // serial-singular cell
          s.psi = {nan, nan, nan};
          s.kappa = nan;
        }
      } else {
        s.psi = {nan, nan, nan};
        s.kappa = nan;
        s.det_a_normalized = nan;
        s.rho = {nan, nan, nan};
      }
      map.samples.push_back(s);
    }
  return map;
}

}  // namespace orthoglide
