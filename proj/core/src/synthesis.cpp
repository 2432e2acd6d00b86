#include "orthoglide/synthesis.hpp"

#include <algorithm>
#include <cmath>

#include "orthoglide/kinetostatics.hpp"

namespace orthoglide {

namespace {

// Crossings of the diagonal transmission curves used purely as bisection
// bracket anchors, expressed as slopes t = -tan(s).
const double kBracketQ2 = (1.0 + std::sqrt(17.0)) / 4.0;  // -tan(s1)
const double kBracketQ1 = -0.5;                           // tan(s2)

double tau(double t) { return t / std::sqrt(1.0 + 2.0 * t * t); }

// Margin of the diagonal constraints at slope t on the Q2 (t > 0) side...
double margin_q2(double t, double psi_max) {
  return std::min(psi_max - (1.0 + 2.0 * t), (1.0 - t) - 1.0 / psi_max);
}

// ...and on the Q1 (t < 0) side.  Both margins are positive at t = 0 and
// decrease monotonically away from it.
double margin_q1(double t, double psi_max) {
  return std::min((1.0 + 2.0 * t) - 1.0 / psi_max, psi_max - (1.0 - t));
}

double bisect(double lo, double hi, double psi_max, double (*margin)(double, double)) {
  // Invariant: margin(lo) >= 0 > margin(hi).
  for (int it = 0; it < 100; ++it) {
    double mid = 0.5 * (lo + hi);
    (margin(mid, psi_max) >= 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

void check_psi_max(double psi_max) {
  if (!(psi_max > 1.0))
    throw Error(ErrorCode::DegenerateRequirement,
                "psi_max must exceed 1: the admissible region collapses to the "
                "isotropic point");
  if (psi_max > kPsiMaxCap)
    throw Error(ErrorCode::UnsupportedRange, "psi_max beyond supported cap of 4");
}

}  // namespace

DiagonalSlopeInterval joint_limit_bisection(double psi_max) {
  check_psi_max(psi_max);
  return {bisect(0.0, kBracketQ1, psi_max, margin_q1),
          bisect(0.0, kBracketQ2, psi_max, margin_q2)};
}

JointLimitSolution joint_limits(double psi_max) {
  check_psi_max(psi_max);
  JointLimitSolution sol;
  sol.t_q1 = -(psi_max - 1.0) / (2.0 * psi_max);
  sol.t_q2 = (psi_max <= 2.0) ? (psi_max - 1.0) / 2.0 : (psi_max - 1.0) / psi_max;

  DiagonalSlopeInterval ref = joint_limit_bisection(psi_max);
  if (std::abs(sol.t_q1 - ref.t_q1) > 1e-8 || std::abs(sol.t_q2 - ref.t_q2) > 1e-8)
    throw std::logic_error("joint_limits: closed form disagrees with bisection");

  auto beta_of = [](double t) { return std::atan(t / std::sqrt(1.0 + t * t)); };
  sol.theta_q1 = std::atan(-sol.t_q1);
  sol.beta_q1 = beta_of(-sol.t_q1);
  sol.theta_q2 = std::atan(sol.t_q2);
  sol.beta_q2 = beta_of(sol.t_q2);
  return sol;
}

MechanismGeometry synthesize(const DesignRequirements& req) {
  if (!(req.workspace_edge > 0.0))
    throw std::invalid_argument("workspace_edge must be positive");
  if (req.tool_offset < 0.0) throw std::invalid_argument("tool_offset must be >= 0");

  JointLimitSolution lim = joint_limits(req.psi_max);
  MechanismGeometry g;
  g.leg_length = req.workspace_edge / (tau(lim.t_q2) - tau(lim.t_q1));
  g.tool_offset = req.tool_offset;
  g.q1 = g.leg_length * tau(lim.t_q1);
  g.q2 = g.leg_length * tau(lim.t_q2);
  g.base_offset = g.q1 - req.tool_offset - g.leg_length;
  g.rho_min = 0.0;
  g.rho_max = g.q2 - g.base_offset -
              std::sqrt(g.leg_length * g.leg_length - 2.0 * g.q2 * g.q2) -
              req.tool_offset;
  return g;
}

ExtremalityReport verify_extremality(const MechanismGeometry& g, double psi_max,
                                     int grid_n) {
  if (grid_n < 2) throw std::invalid_argument("verify_extremality: grid_n must be >= 2");

  ExtremalityReport rep;
  rep.grid_n = grid_n;
  rep.low_resolution = grid_n < 5;

  const double lo_bound = 1.0 / psi_max - 1e-6;
  const double hi_bound = psi_max + 1e-6;
  const double edge = g.workspace_edge();

  double best_min = 1e300, best_max = -1e300;
  std::array<int, 3> argmin_cell{}, argmax_cell{};
  auto node = [&](int k) { return g.q1 + edge * k / (grid_n - 1); };

  for (int ix = 0; ix < grid_n; ++ix)
    for (int iy = 0; iy < grid_n; ++iy)
      for (int iz = 0; iz < grid_n; ++iz) {
        Vec3 p{node(ix), node(iy), node(iz)};
        std::array<double, 3> psi;
        try {
          psi = transmission(g, p).psi;
        } catch (const Error&) {
          if (rep.violations.size() < 8)
            rep.violations.push_back({p, {0.0, 0.0, 0.0}});
          continue;
        }
        if (psi[0] < lo_bound || psi[2] > hi_bound || !std::isfinite(psi[2])) {
          if (rep.violations.size() < 8) rep.violations.push_back({p, psi});
        }
        if (psi[0] < best_min) {
          best_min = psi[0];
          argmin_cell = {ix, iy, iz};
          rep.argmin = p;
        }
        if (psi[2] > best_max) {
          best_max = psi[2];
          argmax_cell = {ix, iy, iz};
          rep.argmax = p;
        }
      }

  rep.psi_min_observed = best_min;
  rep.psi_max_observed = best_max;
  auto is_corner = [&](const std::array<int, 3>& c) {
    bool all_lo = c[0] == 0 && c[1] == 0 && c[2] == 0;
    int m = grid_n - 1;
    bool all_hi = c[0] == m && c[1] == m && c[2] == m;
    return all_lo || all_hi;
  };
  rep.extrema_at_corners = is_corner(argmin_cell) && is_corner(argmax_cell);
  rep.ok = rep.violations.empty() && rep.extrema_at_corners;
  return rep;
}

}  // namespace orthoglide
