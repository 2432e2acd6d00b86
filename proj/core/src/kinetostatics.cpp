#include "orthoglide/kinetostatics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "orthoglide/kinematics.hpp"

namespace orthoglide {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Characteristic polynomial p(x) = det(M - x I) = -x^3 + c2 x^2 - c1 x + c0.
struct CharPoly {
  double c2, c1, c0;
  double eval(double x) const { return ((-x + c2) * x - c1) * x + c0; }
  double deriv(double x) const { return -3.0 * x * x + 2.0 * c2 * x - c1; }
};

CharPoly char_poly(const Mat3& M) {
  double c2 = M(0, 0) + M(1, 1) + M(2, 2);
  double c1 = M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0) + M(0, 0) * M(2, 2) -
              M(0, 2) * M(2, 0) + M(1, 1) * M(2, 2) - M(1, 2) * M(2, 1);
  return {c2, c1, M.det()};
}

// Unit eigenvector for an eigenvalue whose (M - x I) has rank 2: the best
// cross product of two rows spans the null space.
Vec3 null_direction(const Mat3& M, double x) {
  Mat3 S = M;
  for (int i = 0; i < 3; ++i) S(i, i) -= x;
  Vec3 best{1.0, 0.0, 0.0};
  double best_norm = -1.0;
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (auto& pr : pairs) {
    Vec3 c = S.row(pr[0]).cross(S.row(pr[1]));
    double n = c.squared_norm();
    if (n > best_norm) {
      best_norm = n;
      best = c;
    }
  }
  return best / std::sqrt(best_norm);
}

Vec3 sign_normalized(Vec3 v) {
  int imax = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
  return v[imax] < 0.0 ? -v : v;
}

}  // namespace

SymmetricEigen eigen_symmetric(const Mat3& M) {
  SymmetricEigen out;
  const double q = (M(0, 0) + M(1, 1) + M(2, 2)) / 3.0;
  double p2 = 0.0;
  for (int i = 0; i < 3; ++i) {
    p2 += (M(i, i) - q) * (M(i, i) - q);
    for (int j = i + 1; j < 3; ++j) p2 += 2.0 * M(i, j) * M(i, j);
  }
  const double scale = std::abs(q) + std::sqrt(p2);
  if (std::sqrt(p2) <= 1e-14 * std::max(scale, 1e-300)) {
    // Scalar multiple of the identity.
    out.values = {q, q, q};
    out.vectors = {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
    return out;
  }
  const double pp = std::sqrt(p2 / 6.0);
  Mat3 B = M;
  for (int i = 0; i < 3; ++i) B(i, i) -= q;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) B(i, j) /= pp;
  const double r = std::clamp(B.det() / 2.0, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  double l2 = q + 2.0 * pp * std::cos(phi);                      // largest
  double l0 = q + 2.0 * pp * std::cos(phi + 2.0 * M_PI / 3.0);   // smallest
  double l1 = 3.0 * q - l0 - l2;
  std::array<double, 3> vals{l0, l1, l2};
  std::sort(vals.begin(), vals.end());

  // The better-separated extreme root is simple: one Newton step on the
  // characteristic polynomial pins it to machine precision.
  int lead = (vals[2] - vals[1] >= vals[1] - vals[0]) ? 2 : 0;
  const CharPoly cp = char_poly(M);
  {
    double d = cp.deriv(vals[lead]);
    if (std::abs(d) > 1e-12 * std::max(scale * scale, 1e-300))
      vals[lead] -= cp.eval(vals[lead]) / d;
  }
  Vec3 v_lead = null_direction(M, vals[lead]);

  // Deflate: the remaining pair are the eigenvalues of M projected onto
  // the orthogonal complement of v_lead.  Unlike roots of the cubic, the
  // projected 2x2 stays fully accurate when the pair is (nearly) repeated.
  Vec3 u = std::abs(v_lead.x) > 0.5 ? Vec3{0, 1, 0} : Vec3{1, 0, 0};
  Vec3 e1 = (u - v_lead * u.dot(v_lead)).normalized();
  Vec3 e2 = v_lead.cross(e1);
  const Vec3 me1 = M * e1, me2 = M * e2;
  const double a11 = e1.dot(me1), a12 = e1.dot(me2), a22 = e2.dot(me2);
  const double mid = 0.5 * (a11 + a22);
  const double rad = std::sqrt(std::max(0.25 * (a11 - a22) * (a11 - a22) + a12 * a12, 0.0));
  if (lead == 2) {
    vals[0] = mid - rad;
    vals[1] = mid + rad;
  } else {
    vals[1] = mid - rad;
    vals[2] = mid + rad;
  }
  out.values = vals;

  // Eigenvector in the complement plane for the pair member farthest from
  // the lead eigenvalue; the middle one closes the right-handed set.
  const double lam = (lead == 2) ? mid - rad : mid + rad;
  Vec3 v_far;
  if (std::abs(a11 - lam) > std::abs(a22 - lam))
    v_far = e1 * (-a12) + e2 * (a11 - lam);
  else
    v_far = e1 * (a22 - lam) + e2 * (-a12);
  double n = v_far.norm();
  v_far = (n > 1e-300) ? v_far / n : e1;  // repeated pair: any basis vector works

  Vec3 v_mid = v_lead.cross(v_far);

  out.vectors[lead] = sign_normalized(v_lead);
  out.vectors[lead == 2 ? 0 : 2] = sign_normalized(v_far);
  out.vectors[1] = sign_normalized(v_mid);
  return out;
}

TransmissionReport transmission(const MechanismGeometry& g, const Vec3& p) {
  JacobianSet jac = jacobians(g, p);
  if (jac.serial_singular)
    throw Error(ErrorCode::SerialSingular,
                "serial-singular pose: transmission factors undefined");
  const Mat3 M = jac.J_inv.transposed() * jac.J_inv;
  SymmetricEigen eig = eigen_symmetric(M);

  TransmissionReport rep;
  for (int i = 0; i < 3; ++i) {
    // values ascending => xi ascending; reports want xi descending.
    double xi = std::sqrt(std::max(eig.values[2 - i], 0.0));
    rep.xi[i] = xi;
    rep.psi[i] = (xi > 0.0) ? 1.0 / xi : kInf;
    rep.axes[i] = eig.vectors[2 - i];
  }
  rep.parallel_singular = rep.xi[2] < kParallelTol;
  rep.kappa = rep.parallel_singular ? kInf : rep.xi[0] / rep.xi[2];
  return rep;
}

std::array<double, 3> DiagonalFactors::sorted() const {
  std::array<double, 3> s{psi_diagonal, psi_transverse, psi_transverse};
  std::sort(s.begin(), s.end());
  return s;
}

DiagonalFactors diagonal_transmission(const MechanismGeometry& g, double c) {
  const double L = g.leg_length;
  const double rad = L * L - 2.0 * c * c;
  if (rad <= 0.0)
    throw Error(ErrorCode::DomainError,
                "diagonal coordinate must satisfy |c| < L/sqrt(2)");
  const double t = c / std::sqrt(rad);
  const double xi_diag = std::abs(1.0 + 2.0 * t);
  const double xi_perp = std::abs(1.0 - t);
  DiagonalFactors f;
  f.psi_diagonal = (xi_diag > kParallelTol) ? 1.0 / xi_diag : kInf;
  f.psi_transverse = (xi_perp > kParallelTol) ? 1.0 / xi_perp : kInf;
  f.parallel_singular = xi_diag <= kParallelTol || xi_perp <= kParallelTol;
  return f;
}

double IsotropyResidual::max_residual() const {
  double m = 0.0;
  for (double v : length) m = std::max(m, v);
  for (double v : orthogonality) m = std::max(m, v);
  return m;
}

IsotropyResidual isotropy_residual(const MechanismGeometry& g, const Vec3& p) {
  JacobianSet jac = jacobians(g, p);
  const double L = g.leg_length;
  IsotropyResidual res;
  for (int i = 0; i < 3; ++i) {
    double eta = jac.eta[i];
    res.length[i] = (std::abs(eta) > 0.0) ? std::abs(jac.A.row(i).norm() / eta - 1.0) : kInf;
    int j = (i + 1) % 3;
    res.orthogonality[i] = std::abs(jac.A.row(i).dot(jac.A.row(j))) / (L * L);
  }
  return res;
}

double condition_number(const MechanismGeometry& g, const Vec3& p) {
  return transmission(g, p).kappa;
}

}  // namespace orthoglide
