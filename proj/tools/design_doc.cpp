#include "design_doc.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "orthoglide/synthesis.hpp"

namespace orthoglide::tools {

std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

DesignDocument make_design(const DesignRequirements& req) {
  DesignDocument doc;
  doc.geometry = synthesize(req);
  doc.psi_max = req.psi_max;
  doc.workspace_edge = req.workspace_edge;
  doc.stroke_ratio = req.workspace_edge / doc.geometry.rho_max;
  doc.limits = joint_limits(req.psi_max);
  return doc;
}

void write_design(std::ostream& os, const DesignDocument& doc) {
  const MechanismGeometry& g = doc.geometry;
  os << "{\n";
  os << "  \"leg_length_mm\": " << fmt17(g.leg_length) << ",\n";
  os << "  \"tool_offset_mm\": " << fmt17(g.tool_offset) << ",\n";
  os << "  \"base_offset_mm\": " << fmt17(g.base_offset) << ",\n";
  os << "  \"rho_min_mm\": " << fmt17(g.rho_min) << ",\n";
  os << "  \"rho_max_mm\": " << fmt17(g.rho_max) << ",\n";
  os << "  \"q1_mm\": " << fmt17(g.q1) << ",\n";
  os << "  \"q2_mm\": " << fmt17(g.q2) << ",\n";
  os << "  \"psi_max\": " << fmt17(doc.psi_max) << ",\n";
  os << "  \"workspace_edge_mm\": " << fmt17(doc.workspace_edge) << ",\n";
  os << "  \"joint_limits\": {\n";
  os << "    \"theta_q1_deg\": " << fmt17(rad_to_deg(doc.limits.theta_q1)) << ",\n";
  os << "    \"beta_q1_deg\": " << fmt17(rad_to_deg(doc.limits.beta_q1)) << ",\n";
  os << "    \"theta_q2_deg\": " << fmt17(rad_to_deg(doc.limits.theta_q2)) << ",\n";
  os << "    \"beta_q2_deg\": " << fmt17(rad_to_deg(doc.limits.beta_q2)) << "\n";
  os << "  },\n";
  os << "  \"stroke_ratio\": " << fmt17(doc.stroke_ratio) << "\n";
  os << "}\n";
}

void write_design_file(const std::string& path, const DesignDocument& doc) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write design file: " + path);
  write_design(os, doc);
}

DesignDocument read_design(std::istream& is) {
  nlohmann::json j = nlohmann::json::parse(is);
  DesignDocument doc;
  MechanismGeometry& g = doc.geometry;
  g.leg_length = j.at("leg_length_mm").get<double>();
  g.tool_offset = j.at("tool_offset_mm").get<double>();
  g.base_offset = j.at("base_offset_mm").get<double>();
  g.rho_min = j.at("rho_min_mm").get<double>();
  g.rho_max = j.at("rho_max_mm").get<double>();
  g.q1 = j.at("q1_mm").get<double>();
  g.q2 = j.at("q2_mm").get<double>();
  doc.psi_max = j.at("psi_max").get<double>();
  doc.workspace_edge = j.at("workspace_edge_mm").get<double>();
  doc.stroke_ratio = j.at("stroke_ratio").get<double>();
  const auto& lim = j.at("joint_limits");
  doc.limits.theta_q1 = deg_to_rad(lim.at("theta_q1_deg").get<double>());
  doc.limits.beta_q1 = deg_to_rad(lim.at("beta_q1_deg").get<double>());
  doc.limits.theta_q2 = deg_to_rad(lim.at("theta_q2_deg").get<double>());
  doc.limits.beta_q2 = deg_to_rad(lim.at("beta_q2_deg").get<double>());
  doc.limits.t_q1 = -std::tan(doc.limits.theta_q1);
  doc.limits.t_q2 = std::tan(doc.limits.theta_q2);
  return doc;
}

DesignDocument read_design_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read design file: " + path);
  return read_design(is);
}

}  // namespace orthoglide::tools
