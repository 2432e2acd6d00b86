#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "design_doc.hpp"
#include "orthoglide/kinematics.hpp"
#include "orthoglide/kinetostatics.hpp"
#include "orthoglide/singularity.hpp"
#include "orthoglide/synthesis.hpp"
#include "orthoglide/workspace.hpp"

namespace orthoglide::tools {

namespace {

const char* membership_name(Membership m) {
  switch (m) {
    case Membership::Inside: return "Inside";
    case Membership::OutsideReach: return "OutsideReach";
    case Membership::OutsideStroke: return "OutsideStroke";
  }
  return "?";
}

const char* class_name(SingularityClass c) {
  switch (c) {
    case SingularityClass::Regular: return "Regular";
    case SingularityClass::Parallel: return "Parallel";
    case SingularityClass::Serial: return "Serial";
    case SingularityClass::Both: return "Both";
  }
  return "?";
}

bool parse_triple(const std::string& s, Vec3& out) {
  std::istringstream is(s);
  char c1 = 0, c2 = 0;
  if (!(is >> out.x >> c1 >> out.y >> c2 >> out.z) || c1 != ',' || c2 != ',')
    return false;
  is >> std::ws;
  return is.eof();
}

bool parse_plane(const std::string& s, Axis& axis, double& offset) {
  if (s.size() < 3 || s[1] != '=') return false;
  switch (s[0]) {
    case 'x': axis = Axis::X; break;
    case 'y': axis = Axis::Y; break;
    case 'z': axis = Axis::Z; break;
    default: return false;
  }
  std::istringstream is(s.substr(2));
  if (!(is >> offset)) return false;
  is >> std::ws;
  return is.eof();
}

int cmd_synth(double workspace, double psi_max, double offset, const std::string& out) {
  DesignRequirements req{workspace, psi_max, offset};
  DesignDocument doc;
  try {
    doc = make_design(req);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DegenerateRequirement ||
        e.code() == ErrorCode::UnsupportedRange) {
      std::cerr << "synth: " << e.what() << "\n";
      return kExitRequirement;
    }
    throw;
  }
  write_design_file(out, doc);
  const MechanismGeometry& g = doc.geometry;
  std::cout << "wrote " << out << "\n"
            << "  L = " << fmt17(g.leg_length) << " mm, a = " << fmt17(g.base_offset)
            << " mm\n"
            << "  rho range = [" << fmt17(g.rho_min) << ", " << fmt17(g.rho_max)
            << "] mm, stroke ratio = " << fmt17(doc.stroke_ratio) << "\n"
            << "  cube [" << fmt17(g.q1) << ", " << fmt17(g.q2) << "]^3 mm\n";
  if (psi_max > 2.0)
    std::cerr << "synth: psi_max > 2: corner extremality is not established at this "
                 "range; run `verify` on the design (its verdict is authoritative)\n";
  return kExitOk;
}

int cmd_analyze(const std::string& design_path, const std::string& point_spec,
                const std::string& out) {
  Vec3 p;
  if (!parse_triple(point_spec, p)) {
    std::cerr << "analyze: --point expects x,y,z\n";
    return kExitUsage;
  }
  DesignDocument doc = read_design_file(design_path);
  const MechanismGeometry& g = doc.geometry;

  Membership verdict = contains(g, p);
  if (verdict == Membership::OutsideReach) {
    std::cerr << "analyze: point is outside the reach cylinders\n";
    return kExitOutOfReach;
  }

  nlohmann::ordered_json j;
  j["point_mm"] = {p.x, p.y, p.z};
  j["verdict"] = membership_name(verdict);
  PoseState pose = pose_state(g, p);
  j["rho_mm"] = {pose.legs[0].rho, pose.legs[1].rho, pose.legs[2].rho};
  nlohmann::ordered_json legs = nlohmann::ordered_json::array();
  for (const LegPosture& leg : pose.legs) {
    legs.push_back({{"rho_mm", leg.rho},
                    {"theta_deg", rad_to_deg(leg.theta)},
                    {"beta_deg", rad_to_deg(leg.beta)},
                    {"link_dir", {leg.link_dir.x, leg.link_dir.y, leg.link_dir.z}}});
  }
  j["legs"] = legs;

  SingularityReport sing = classify(g, p);
  j["det_a_normalized"] = sing.det_a_normalized;
  j["det_b_normalized"] = sing.det_b_normalized;
  j["singularity_class"] = class_name(sing.cls);
  j["serial_singular"] = pose.jacobians.serial_singular;

  if (!pose.jacobians.serial_singular) {
    TransmissionReport rep = transmission(g, p);
    j["psi"] = rep.psi;
    j["xi"] = rep.xi;
    // Static duality reading: force factors as reciprocals of the velocity
    // factors along the same axes.
    j["force_factors"] = rep.xi;
    j["kappa"] = rep.kappa;
    j["parallel_singular"] = rep.parallel_singular;
    nlohmann::ordered_json axes = nlohmann::ordered_json::array();
    for (const Vec3& ax : rep.axes) axes.push_back({ax.x, ax.y, ax.z});
    j["axes"] = axes;
  } else {
    j["psi"] = nullptr;
    j["xi"] = nullptr;
    j["force_factors"] = nullptr;
    j["kappa"] = nullptr;
    j["parallel_singular"] = std::abs(sing.det_a_normalized) < kParallelTol;
  }

  std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out);
    os << text;
  }
  return kExitOk;
}

int cmd_map(const std::string& design_path, const std::string& plane_spec, int grid,
            const std::string& out) {
  Axis axis;
  double offset = 0.0;
  if (!parse_plane(plane_spec, axis, offset)) {
    std::cerr << "map: --plane expects x=<mm>, y=<mm> or z=<mm>\n";
    return kExitUsage;
  }
  DesignDocument doc = read_design_file(design_path);
  FieldMap map = field_map(doc.geometry, axis, offset, grid);

  std::ofstream os(out);
  if (!os) throw std::runtime_error("cannot write " + out);
  os << "x_mm,y_mm,z_mm,psi1,psi2,psi3,kappa,detA_norm,rho1_mm,rho2_mm,rho3_mm,inside\n";
  for (const FieldSample& s : map.samples) {
    os << fmt17(s.p.x) << ',' << fmt17(s.p.y) << ',' << fmt17(s.p.z) << ','
       << fmt17(s.psi[0]) << ',' << fmt17(s.psi[1]) << ',' << fmt17(s.psi[2]) << ','
       << fmt17(s.kappa) << ',' << fmt17(s.det_a_normalized) << ',' << fmt17(s.rho[0])
       << ',' << fmt17(s.rho[1]) << ',' << fmt17(s.rho[2]) << ','
       << (s.verdict == Membership::Inside ? 1 : 0) << '\n';
  }
  std::cout << "wrote " << out << " (" << map.samples.size() << " rows)\n";
  return kExitOk;
}

int cmd_singularities(const std::string& design_path, const std::vector<double>& box_spec,
                      int grid, const std::string& out) {
  DesignDocument doc = read_design_file(design_path);
  Box box{{box_spec[0], box_spec[1], box_spec[2]},
          {box_spec[3], box_spec[4], box_spec[5]}};
  std::vector<Vec3> points;
  try {
    points = parallel_locus_sample(doc.geometry, box, grid);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::EmptyLocus) {
      std::cerr << "singularities: " << e.what() << "\n";
      return kExitEmptyLocus;
    }
    throw;
  }
  std::ofstream os(out);
  if (!os) throw std::runtime_error("cannot write " + out);
  for (const Vec3& p : points)
    os << fmt17(p.x) << ' ' << fmt17(p.y) << ' ' << fmt17(p.z) << '\n';
  std::cout << "wrote " << out << " (" << points.size() << " points)\n";
  return kExitOk;
}

int cmd_verify(const std::string& design_path, int grid) {
  DesignDocument doc = read_design_file(design_path);
  const MechanismGeometry& g = doc.geometry;

  ExtremalityReport rep = verify_extremality(g, doc.psi_max, grid);
  InclusionResult inc = cube_inclusion(g, g.workspace_edge(), g.cube_lo(),
                                       std::max(grid, 2));

  std::cout << "transmission bounds over " << grid << "^3 cube grid: "
            << (rep.ok ? "ok" : "FAILED") << "\n"
            << "  psi range observed [" << fmt17(rep.psi_min_observed) << ", "
            << fmt17(rep.psi_max_observed) << "], extrema at corner cells: "
            << (rep.extrema_at_corners ? "yes" : "NO") << "\n";
  for (const auto& v : rep.violations)
    std::cout << "  bound violated at (" << fmt17(v.p.x) << ", " << fmt17(v.p.y) << ", "
              << fmt17(v.p.z) << "): psi = [" << fmt17(v.psi[0]) << ", "
              << fmt17(v.psi[1]) << ", " << fmt17(v.psi[2]) << "]\n";
  if (rep.low_resolution)
    std::cout << "  warning: LowResolution (grid " << grid << ")\n";

  std::cout << "cube inclusion on boundary grid: " << (inc.included ? "ok" : "FAILED")
            << "\n";
  if (!inc.included)
    std::cout << "  first failure at (" << fmt17(inc.first_failure.x) << ", "
              << fmt17(inc.first_failure.y) << ", " << fmt17(inc.first_failure.z)
              << "): " << membership_name(inc.failure_verdict) << "\n";

  return (rep.ok && inc.included) ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Design synthesis and kinetostatic analysis for an orthogonal "
               "3-axis translational parallel machine"};
  app.require_subcommand(1);

  // synth
  auto* synth = app.add_subcommand("synth",
                                   "Size a machine for a prescribed cubic workspace");
  double workspace = 0.0, psi_max = 0.0, offset = 0.0;
  std::string synth_out = "design.json";
  synth->add_option("--workspace", workspace, "Cube edge length, mm")
      ->required()
      ->check(CLI::PositiveNumber);
  synth->add_option("--psi-max", psi_max, "Velocity transmission bound, > 1")->required();
  synth->add_option("--offset", offset, "Tool offset e, mm")->check(CLI::NonNegativeNumber);
  synth->add_option("--out", synth_out, "Output design file (JSON)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Full kinetostatic report at one point");
  std::string design_path, point_spec, analyze_out;
  analyze->add_option("design", design_path, "Design file from `synth`")
      ->required()
      ->check(CLI::ExistingFile);
  analyze->add_option("--point", point_spec, "Tool point x,y,z in mm")->required();
  analyze->add_option("--out", analyze_out, "Write the JSON report here instead of stdout");

  // map
  auto* mapcmd = app.add_subcommand("map", "Sample transmission fields over a cross-section");
  std::string map_design, plane_spec, map_out = "map.csv";
  int map_grid = 50;
  mapcmd->add_option("design", map_design, "Design file from `synth`")
      ->required()
      ->check(CLI::ExistingFile);
  mapcmd->add_option("--plane", plane_spec, "Section plane, e.g. z=-73.2")->required();
  mapcmd->add_option("--grid", map_grid, "Nodes per side")->check(CLI::Range(2, 4096));
  mapcmd->add_option("--out", map_out, "Output CSV path");

  // singularities
  auto* sing = app.add_subcommand("singularities",
                                  "Sample the parallel-singularity locus in a box");
  std::string sing_design, sing_out = "singularities.xyz";
  std::vector<double> box_spec;
  int sing_grid = 24;
  sing->add_option("design", sing_design, "Design file from `synth`")
      ->required()
      ->check(CLI::ExistingFile);
  sing->add_option("--box", box_spec, "Box lo_x,lo_y,lo_z,hi_x,hi_y,hi_z in mm")
      ->required()
      ->delimiter(',')
      ->expected(6);
  sing->add_option("--grid", sing_grid, "Nodes per side")->check(CLI::Range(8, 512));
  sing->add_option("--out", sing_out, "Output point-cloud path (x y z per line)");

  // verify
  auto* verify = app.add_subcommand("verify",
                                    "Check transmission bounds and cube inclusion");
  std::string verify_design;
  int verify_grid = 21;
  verify->add_option("design", verify_design, "Design file from `synth`")
      ->required()
      ->check(CLI::ExistingFile);
  verify->add_option("--grid", verify_grid, "Nodes per side")->check(CLI::Range(2, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (synth->parsed()) return cmd_synth(workspace, psi_max, offset, synth_out);
    if (analyze->parsed()) return cmd_analyze(design_path, point_spec, analyze_out);
    if (mapcmd->parsed()) return cmd_map(map_design, plane_spec, map_grid, map_out);
    if (sing->parsed()) return cmd_singularities(sing_design, box_spec, sing_grid, sing_out);
    if (verify->parsed()) return cmd_verify(verify_design, verify_grid);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.emplace_back("orthoglide");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const std::string& s : full) argv.push_back(s.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace orthoglide::tools
