#ifndef ORTHOGLIDE_SINGULARITY_HPP
#define ORTHOGLIDE_SINGULARITY_HPP

#include <array>
#include <vector>

#include "orthoglide/model.hpp"

namespace orthoglide {

enum class SingularityClass { Regular, Parallel, Serial, Both };

// det A scaled by L^3 (signed), det B scaled by L^3, and the resulting
// class.  Parallel when |det A|/L^3 < 1e-10, Serial when |det B|/L^3 <
// 1e-10.  Stroke limits are ignored: the loci are geometric.
struct SingularityReport {
  double det_a_normalized = 0.0;
  double det_b_normalized = 0.0;
  SingularityClass cls = SingularityClass::Regular;
};

SingularityReport classify(const MechanismGeometry& geom, const Vec3& p);

struct Box {
  Vec3 lo;
  Vec3 hi;
};

// Samples the parallel-singularity locus det A = 0 inside a box.  det A is
// evaluated on a grid_n^3 grid; roots are located on grid edges both where
// the sign flips (bisection) and where |det A| dips to a quadratic touch
// without flipping (golden-section refinement) -- the all-links-parallel
// sphere |p| = L is a rank-1 zero of det A and never changes sign, so sign
// scanning alone cannot see it.  Unreachable nodes are skipped.  The result
// is deduplicated and sorted lexicographically; throws EmptyLocus when
// nothing is found.
std::vector<Vec3> parallel_locus_sample(const MechanismGeometry& geom,
                                        const Box& box, int grid_n);

// Serial singularities of leg i live where the link is perpendicular to
// the leg axis: the rim of the reach cylinder, carried along the axis by
// the stroke.  Reported per leg as the plane-normal (the leg axis) and the
// axis-coordinate interval e + a + [rho_min, rho_max] swept by the locus.
struct SerialPlaneFamily {
  int leg = 0;
  Vec3 normal;
  double offset_min = 0.0;
  double offset_max = 0.0;
};

std::array<SerialPlaneFamily, 3> serial_locus_planes(const MechanismGeometry& geom);

// True when p lies on leg's serial locus (reach-cylinder rim), i.e. the
// inverse-kinematics radicand vanishes.
bool on_serial_locus(const MechanismGeometry& geom, const Vec3& p, int leg);

}  // namespace orthoglide

#endif  // ORTHOGLIDE_SINGULARITY_HPP
