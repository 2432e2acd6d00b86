#ifndef ORTHOGLIDE_KINETOSTATICS_HPP
#define ORTHOGLIDE_KINETOSTATICS_HPP

#include <array>

#include "orthoglide/model.hpp"

namespace orthoglide {

// Eigen-decomposition of a symmetric 3x3 matrix: trigonometric solution of
// the characteristic cubic plus one Newton polish step per root.
// values ascending; vectors[i] pairs with values[i], unit length, sign
// normalized so the largest-magnitude component is positive.
struct SymmetricEigen {
  std::array<double, 3> values{};
  std::array<Vec3, 3> vectors{};
};

SymmetricEigen eigen_symmetric(const Mat3& M);

// Manipulability ellipsoid of the inverse velocity map at p: decomposes
// (J J^T)^-1 = (J^-1)^T J^-1.  xi_i are the square roots of its
// eigenvalues; psi_i = 1/xi_i.  When the smallest xi drops below 1e-10 the
// pose is parallel-singular: the report is flagged, the unbounded psi
// becomes +inf, and the remaining factors stay finite.  Throws
// SerialSingular when J^-1 is unavailable.
TransmissionReport transmission(const MechanismGeometry& geom, const Vec3& p);

// Closed-form transmission factors on the cube diagonal p = (c,c,c).
// With s = sqrt(L^2 - 2 c^2) and t = c/s:
//
//     psi_diagonal   = 1 / |1 + 2 t|     (axis (1,1,1)/sqrt(3))
//     psi_transverse = 1 / |1 - t|       (double, any axis normal to it)
//
// Throws DomainError for |c| >= L/sqrt(2).
struct DiagonalFactors {
  double psi_diagonal = 0.0;
  double psi_transverse = 0.0;
  bool parallel_singular = false;

  std::array<double, 3> sorted() const;  // ascending, like TransmissionReport
};

DiagonalFactors diagonal_transmission(const MechanismGeometry& geom, double c);

// Residuals of the isotropy conditions: per-leg |L/eta_i - 1| and the three
// normalized pairwise link dot products.  All six vanish only at the
// isotropic configuration.
struct IsotropyResidual {
  std::array<double, 3> length{};
  std::array<double, 3> orthogonality{};

  double max_residual() const;
};

IsotropyResidual isotropy_residual(const MechanismGeometry& geom, const Vec3& p);

// Condition number of J^-1 (ratio of extreme singular values, >= 1);
// +inf at a parallel singularity.
double condition_number(const MechanismGeometry& geom, const Vec3& p);

}  // namespace orthoglide

#endif  // ORTHOGLIDE_KINETOSTATICS_HPP
