#ifndef ORTHOGLIDE_MODEL_HPP
#define ORTHOGLIDE_MODEL_HPP

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

/*
  Frame and sign convention used throughout this library.

  The machine has three orthogonal actuated linear joints whose axes
  intersect at the origin O.  Axis of leg i is n_i:

      n_1 = +x,  n_2 = +y,  n_3 = +z

  Along its own axis, leg i carries

      A_i at signed coordinate a            (base point, typically a < 0)
      B_i at a + rho_i                      (carriage, rho_i = actuated stroke)
      C_i = P - e * n_i                     (platform attachment, e = tool offset)

  and the parallelogram link B_iC_i has fixed length L.  All lengths are
  millimetres, all angles radians.

  Leg angles (theta_i, beta_i) parametrize the unit link direction
  u = (C_i - B_i)/L in the leg's cyclic axis order (axis_i, axis_{i+1},
  axis_{i+2}):

      u = (cos(theta) cos(beta), sin(theta) cos(beta), -sin(beta))

  The prescribed cubic workspace spans [q1, q2]^3 with q1 < 0 < q2; its
  diagonal corners are Q1 = (q1,q1,q1) and Q2 = (q2,q2,q2).
*/

namespace orthoglide {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double& operator[](int i) { return (&x)[i]; }
  double operator[](int i) const { return (&x)[i]; }

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3 operator-() const { return {-x, -y, -z}; }

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double squared_norm() const { return dot(*this); }
  double norm() const { return std::sqrt(squared_norm()); }
  Vec3 normalized() const { return *this / norm(); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

// Row-major 3x3 matrix; only what 3-DOF kinematics needs.
struct Mat3 {
  std::array<std::array<double, 3>, 3> m{};

  static Mat3 identity() {
    Mat3 r;
    r.m[0][0] = r.m[1][1] = r.m[2][2] = 1.0;
    return r;
  }
  static Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
    Mat3 r;
    r.set_row(0, r0);
    r.set_row(1, r1);
    r.set_row(2, r2);
    return r;
  }

  double& operator()(int i, int j) { return m[i][j]; }
  double operator()(int i, int j) const { return m[i][j]; }

  Vec3 row(int i) const { return {m[i][0], m[i][1], m[i][2]}; }
  Vec3 col(int j) const { return {m[0][j], m[1][j], m[2][j]}; }
  void set_row(int i, const Vec3& v) {
    m[i][0] = v.x;
    m[i][1] = v.y;
    m[i][2] = v.z;
  }

  Mat3 transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
  }

  double det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }

  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
        r.m[i][j] = s;
      }
    return r;
  }

  Vec3 operator*(const Vec3& v) const {
    return {row(0).dot(v), row(1).dot(v), row(2).dot(v)};
  }
};

// Solves M * x = b by Cramer's rule; caller guarantees det(M) != 0.
Vec3 solve3(const Mat3& M, const Vec3& b);

enum class ErrorCode {
  OutOfReach,             // point violates a leg's reach cylinder
  JointLimit,             // stroke outside [rho_min, rho_max]
  NoSolution,             // forward kinematics: spheres yield no working pose
  Degenerate,             // forward kinematics: solution set not isolated
  SerialSingular,         // some eta_i = 0, J^-1 unavailable
  DomainError,            // argument outside a closed-form formula's domain
  DegenerateRequirement,  // psi_max <= 1: limits collapse to the isotropic point
  UnsupportedRange,       // psi_max beyond the supported cap
  EmptyLocus,             // locus sampling found nothing in the box
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Synthesis inputs: cube edge to contain, transmission bound, tool offset.
// psi_min is always the reciprocal of psi_max.
struct DesignRequirements {
  double workspace_edge = 0.0;  // mm
  double psi_max = 0.0;         // dimensionless, > 1
  double tool_offset = 0.0;     // mm, >= 0

  double psi_min() const { return 1.0 / psi_max; }
};

// All fixed lengths of one machine instance plus the prescribed-cube
// corner coordinates the instance was sized for.
struct MechanismGeometry {
  double leg_length = 0.0;   // L = |B_i C_i|, mm
  double tool_offset = 0.0;  // e = |C_i P|, mm
  double base_offset = 0.0;  // a = O A_i, signed mm
  double rho_min = 0.0;      // mm
  double rho_max = 0.0;      // mm
  double q1 = 0.0;           // mm, lower diagonal corner coordinate
  double q2 = 0.0;           // mm, upper diagonal corner coordinate

  double workspace_edge() const { return q2 - q1; }
  Vec3 cube_lo() const { return {q1, q1, q1}; }
  Vec3 cube_hi() const { return {q2, q2, q2}; }
};

// Structural consistency checks; empty result means the geometry is sound.
std::vector<std::string> geometry_issues(const MechanismGeometry& geom);

// Per-leg joint state.  theta/beta follow the cyclic convention above;
// link_dir is the unit direction of C_i - B_i.
struct LegPosture {
  double rho = 0.0;
  double theta = 0.0;
  double beta = 0.0;
  Vec3 link_dir;
};

// A p_dot = B rho_dot with A rows (c_i - b_i)^T and B = diag(eta_i),
// eta_i = (c_i - b_i) . n_i.  J_inv = B^-1 A is only valid when no leg
// is serial-singular.
struct JacobianSet {
  Mat3 A;
  std::array<double, 3> eta{};
  Mat3 J_inv;
  bool serial_singular = false;
  std::array<bool, 3> serial_leg{};
};

// Manipulability ellipsoid summary at one pose.  xi are the principal-axis
// lengths of the joint-rate image ellipsoid (descending); psi_i = 1/xi_i
// are the velocity transmission factors (ascending); axes[i] pairs with
// psi[i] and xi[i].  kappa = xi_max/xi_min is the condition number of J^-1.
struct TransmissionReport {
  std::array<double, 3> psi{};
  std::array<Vec3, 3> axes{};
  std::array<double, 3> xi{};
  double kappa = 0.0;
  bool parallel_singular = false;
};

// Diagonal slope parameters and joint-limit angle magnitudes produced by
// the synthesis solver.  t = tan(theta) along the cube diagonal; t_q1 < 0
// on the Q1 side, t_q2 > 0 on the Q2 side.  Angles are magnitudes.
struct JointLimitSolution {
  double t_q1 = 0.0;
  double t_q2 = 0.0;
  double theta_q1 = 0.0;
  double beta_q1 = 0.0;
  double theta_q2 = 0.0;
  double beta_q2 = 0.0;
};

struct CanonicalFrame {
  std::array<Vec3, 3> leg_axes;
  Vec3 isotropic_tool_point;
};

// The one concrete frame every module assumes (see file header).
CanonicalFrame canonical_frame();

inline Vec3 leg_axis(int leg) {
  Vec3 n;
  n[leg] = 1.0;
  return n;
}

// Scale-invariant tolerances shared across modules.
inline constexpr double kSerialTol = 1e-10;    // on |eta|/L
inline constexpr double kParallelTol = 1e-10;  // on xi and |det A|/L^3
inline constexpr double kGeomRelTol = 1e-9;    // relative geometric checks

inline double rad_to_deg(double rad) { return rad * 180.0 / M_PI; }
inline double deg_to_rad(double deg) { return deg * M_PI / 180.0; }

}  // namespace orthoglide

#endif  // ORTHOGLIDE_MODEL_HPP
