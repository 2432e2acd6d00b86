#include "orthoglide/singularity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "orthoglide/kinematics.hpp"

namespace orthoglide {

namespace {

constexpr double kValleyTrigger = 1e-2;  // node value that starts a touch search
constexpr double kValleyAccept = 1e-9;   // refined |det A|/L^3 counted as zero

// Normalized det A in analysis mode; nullopt when out of reach.
std::optional<double> det_a_norm(const MechanismGeometry& g, const Vec3& p) {
  const double L = g.leg_length;
  Mat3 A;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    double rad = L * L - p[j] * p[j] - p[k] * p[k];
    if (rad < -kGeomRelTol * L * L) return std::nullopt;
    Vec3 link = p;
    link[i] = std::sqrt(std::max(rad, 0.0));
    A.set_row(i, link);
  }
  return A.det() / (L * L * L);
}

Vec3 lerp(const Vec3& a, const Vec3& b, double t) { return a + (b - a) * t; }

// Root by bisection between points of opposite sign.
Vec3 bisect_root(const MechanismGeometry& g, Vec3 a, double fa, Vec3 b) {
  for (int it = 0; it < 80; ++it) {
    Vec3 m = lerp(a, b, 0.5);
    double fm = det_a_norm(g, m).value_or(0.0);
    if (fm == 0.0) return m;
    if ((fm > 0.0) == (fa > 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return lerp(a, b, 0.5);
}

// Golden-section minimum of |det A| on [a, b]; returns the minimizer when
// the minimum is numerically zero (a quadratic touch of the locus).
std::optional<Vec3> touch_root(const MechanismGeometry& g, Vec3 a, Vec3 b) {
  constexpr double kInvPhi = 0.6180339887498949;
  double lo = 0.0, hi = 1.0;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  auto value = [&](double t) {
    auto v = det_a_norm(g, lerp(a, b, t));
    return v ? std::abs(*v) : std::numeric_limits<double>::infinity();
  };
  double f1 = value(x1), f2 = value(x2);
  for (int it = 0; it < 100; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = value(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = value(x2);
    }
  }
  double t = 0.5 * (lo + hi);
  if (std::min(f1, f2) < kValleyAccept) return lerp(a, b, t);
  return std::nullopt;
}

}  // namespace

SingularityReport classify(const MechanismGeometry& g, const Vec3& p) {
  JacobianSet jac = jacobians(g, p);
  const double L3 = g.leg_length * g.leg_length * g.leg_length;
  SingularityReport rep;
  rep.det_a_normalized = jac.A.det() / L3;
  rep.det_b_normalized = jac.eta[0] * jac.eta[1] * jac.eta[2] / L3;
  bool parallel = std::abs(rep.det_a_normalized) < kParallelTol;
  bool serial = std::abs(rep.det_b_normalized) < kParallelTol;
  rep.cls = parallel ? (serial ? SingularityClass::Both : SingularityClass::Parallel)
                     : (serial ? SingularityClass::Serial : SingularityClass::Regular);
  return rep;
}

std::vector<Vec3> parallel_locus_sample(const MechanismGeometry& g, const Box& box,
                                        int grid_n) {
  if (grid_n < 8) throw std::invalid_argument("parallel_locus_sample: grid_n must be >= 8");
  const int n = grid_n;
  const double L = g.leg_length;

  auto node = [&](int ix, int iy, int iz) -> Vec3 {
    return {box.lo.x + (box.hi.x - box.lo.x) * ix / (n - 1),
            box.lo.y + (box.hi.y - box.lo.y) * iy / (n - 1),
            box.lo.z + (box.hi.z - box.lo.z) * iz / (n - 1)};
  };

  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> f(static_cast<size_t>(n) * n * n, nan);
  auto idx = [&](int ix, int iy, int iz) {
    return (static_cast<size_t>(ix) * n + iy) * n + iz;
  };
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz) {
        auto v = det_a_norm(g, node(ix, iy, iz));
        if (v) f[idx(ix, iy, iz)] = *v;
      }

  std::vector<Vec3> points;
  const int step[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int axis = 0; axis < 3; ++axis) {
    const auto* s = step[axis];
    for (int ix = 0; ix < n; ++ix)
      for (int iy = 0; iy < n; ++iy)
        for (int iz = 0; iz < n; ++iz) {
          int jx = ix + s[0], jy = iy + s[1], jz = iz + s[2];
          double f0 = f[idx(ix, iy, iz)];
          if (jx < n && jy < n && jz < n) {
            double f1 = f[idx(jx, jy, jz)];
            if (!std::isnan(f0) && !std::isnan(f1) && (f0 > 0.0) != (f1 > 0.0))
              points.push_back(bisect_root(g, node(ix, iy, iz), f0, node(jx, jy, jz)));
          }
          // Even-order touches: local minimum of |det A| along this axis.
          int hx = ix - s[0], hy = iy - s[1], hz = iz - s[2];
          if (hx >= 0 && hy >= 0 && hz >= 0 && jx < n && jy < n && jz < n) {
            double fp = f[idx(hx, hy, hz)], fn = f[idx(jx, jy, jz)];
            if (!std::isnan(f0) && !std::isnan(fp) && !std::isnan(fn) &&
                std::abs(f0) < kValleyTrigger && std::abs(f0) <= std::abs(fp) &&
                std::abs(f0) <= std::abs(fn) && (fp > 0.0) == (fn > 0.0)) {
              if (auto r = touch_root(g, node(hx, hy, hz), node(jx, jy, jz)))
                points.push_back(*r);
            }
          }
        }
  }

  auto less = [](const Vec3& a, const Vec3& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  };
  std::sort(points.begin(), points.end(), less);
  std::vector<Vec3> unique;
  const double merge = 1e-6 * L;
  for (const Vec3& p : points) {
    if (unique.empty() || (p - unique.back()).norm() > merge) unique.push_back(p);
  }
  if (unique.empty())
    throw Error(ErrorCode::EmptyLocus, "no parallel singularity found in the box");
  return unique;
}

std::array<SerialPlaneFamily, 3> serial_locus_planes(const MechanismGeometry& g) {
  std::array<SerialPlaneFamily, 3> planes;
  const double base = g.tool_offset + g.base_offset;
  for (int i = 0; i < 3; ++i) {
    planes[i].leg = i;
    planes[i].normal = leg_axis(i);
    planes[i].offset_min = base + g.rho_min;
    planes[i].offset_max = base + g.rho_max;
  }
  return planes;
}

bool on_serial_locus(const MechanismGeometry& g, const Vec3& p, int leg) {
  const double L = g.leg_length;
  int j = (leg + 1) % 3, k = (leg + 2) % 3;
  double rad = L * L - p[j] * p[j] - p[k] * p[k];
  return std::abs(rad) < 1e-12 * L * L;
}

}  // namespace orthoglide
