#ifndef ORTHOGLIDE_TOOLS_DESIGN_DOC_HPP
#define ORTHOGLIDE_TOOLS_DESIGN_DOC_HPP

#include <iosfwd>
#include <string>

#include "orthoglide/model.hpp"

namespace orthoglide::tools {

// One synthesized machine as stored on disk: geometry, the requirements it
// was sized for, and the joint-limit angles (kept in radians in memory,
// degrees in the file).
struct DesignDocument {
  MechanismGeometry geometry;
  double psi_max = 0.0;
  double workspace_edge = 0.0;
  double stroke_ratio = 0.0;
  JointLimitSolution limits;
};

DesignDocument make_design(const DesignRequirements& req);

// Flat JSON with fixed key order; numbers printed with 17 significant
// digits so every double round-trips exactly.
void write_design(std::ostream& os, const DesignDocument& doc);
void write_design_file(const std::string& path, const DesignDocument& doc);

DesignDocument read_design(std::istream& is);
DesignDocument read_design_file(const std::string& path);

// 17-significant-digit formatting used for every numeric file this tool
// writes ("nan"/"inf" spelled out).
std::string fmt17(double v);

}  // namespace orthoglide::tools

#endif  // ORTHOGLIDE_TOOLS_DESIGN_DOC_HPP
