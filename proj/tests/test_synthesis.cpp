#include <cmath>

#include "doctest.h"
#include "orthoglide/kinetostatics.hpp"
#include "orthoglide/synthesis.hpp"
#include "support/oracles.hpp"

using namespace orthoglide;

TEST_CASE("joint limits at psi_max = 2") {
  JointLimitSolution sol = joint_limits(2.0);
  CHECK(sol.t_q1 == doctest::Approx(-0.25).epsilon(1e-14));
  CHECK(sol.t_q2 == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::abs(sol.t_q1) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(sol.theta_q1 == doctest::Approx(oracle::kThetaQ1).epsilon(1e-14));
  CHECK(sol.beta_q1 == doctest::Approx(oracle::kBetaQ1).epsilon(1e-14));
  CHECK(sol.theta_q2 == doctest::Approx(oracle::kThetaQ2).epsilon(1e-14));
  CHECK(sol.beta_q2 == doctest::Approx(oracle::kBetaQ2).epsilon(1e-14));
  // Closed-form identities.
  CHECK(std::abs(sol.theta_q1 - std::atan(0.25)) < 1e-15);
  CHECK(std::abs(sol.beta_q1 - std::atan(1.0 / std::sqrt(17.0))) < 1e-15);
  CHECK(std::abs(sol.theta_q2 - std::atan(0.5)) < 1e-15);
  CHECK(std::abs(sol.beta_q2 - std::atan(1.0 / std::sqrt(5.0))) < 1e-15);
}

TEST_CASE("the two Q2 branches agree at psi_max = 2") {
  const double psi = 2.0;
  double branch_low = (psi - 1.0) / 2.0;   // valid for psi_max <= 2
  double branch_high = (psi - 1.0) / psi;  // valid for psi_max > 2
  CHECK(std::abs(branch_low - branch_high) < 1e-10);
  CHECK(std::abs(std::atan(branch_low) - std::atan(branch_high)) < 1e-10);
}

TEST_CASE("branch selection below and above psi_max = 2") {
  CHECK(joint_limits(1.5).t_q2 == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(joint_limits(1.5).theta_q2 == doctest::Approx(oracle::kThetaQ2_15).epsilon(1e-13));
  CHECK(joint_limits(1.5).beta_q2 == doctest::Approx(oracle::kBetaQ2_15).epsilon(1e-13));
  CHECK(joint_limits(1.5).theta_q1 == doctest::Approx(oracle::kThetaQ1_15).epsilon(1e-13));
  CHECK(joint_limits(1.5).beta_q1 == doctest::Approx(oracle::kBetaQ1_15).epsilon(1e-13));
  CHECK(joint_limits(3.0).t_q2 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("degenerate and unsupported requirements") {
  CHECK_THROWS_AS(joint_limits(1.0), Error);
  try {
    joint_limits(1.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateRequirement);
  }
  CHECK_THROWS_AS(joint_limits(0.8), Error);
  try {
    joint_limits(4.5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedRange);
  }
}

TEST_CASE("bisection reference agrees with the closed forms") {
  for (double psi : {1.1, 1.5, 2.0, 2.5, 3.0}) {
    JointLimitSolution closed = joint_limits(psi);
    DiagonalSlopeInterval ref = joint_limit_bisection(psi);
    CHECK(std::abs(closed.t_q1 - ref.t_q1) < 1e-8);
    CHECK(std::abs(closed.t_q2 - ref.t_q2) < 1e-8);
  }
}

TEST_CASE("synthesis reproduces the benchmark machine") {
  MechanismGeometry g = synthesize({200.0, 2.0, 0.0});
  CHECK(g.leg_length == doctest::Approx(oracle::kLegLength).epsilon(1e-12));
  CHECK(g.q1 == doctest::Approx(oracle::kQ1).epsilon(1e-12));
  CHECK(g.q2 == doctest::Approx(oracle::kQ2).epsilon(1e-12));
  CHECK(g.base_offset == doctest::Approx(oracle::kBaseOffset).epsilon(1e-12));
  CHECK(g.rho_max == doctest::Approx(oracle::kRhoMax).epsilon(1e-12));
  CHECK(g.rho_min == 0.0);
  CHECK(200.0 / g.rho_max == doctest::Approx(oracle::kStrokeRatio).epsilon(1e-12));
}

TEST_CASE("tool offset shifts the base points and nothing else") {
  MechanismGeometry base = synthesize({200.0, 2.0, 0.0});
  MechanismGeometry off = synthesize({200.0, 2.0, 10.0});
  CHECK(off.leg_length == doctest::Approx(base.leg_length).epsilon(1e-15));
  CHECK(off.q1 == doctest::Approx(base.q1).epsilon(1e-15));
  CHECK(off.q2 == doctest::Approx(base.q2).epsilon(1e-15));
  CHECK(off.rho_max == doctest::Approx(base.rho_max).epsilon(1e-12));
  CHECK(off.base_offset == doctest::Approx(base.base_offset - 10.0).epsilon(1e-12));
}

TEST_CASE("the pipeline is homogeneous of degree one in the edge length") {
  MechanismGeometry base = synthesize({200.0, 2.0, 0.0});
  for (double k : {0.5, 3.7}) {
    MechanismGeometry scaled = synthesize({200.0 * k, 2.0, 0.0});
    CHECK(std::abs(scaled.leg_length - k * base.leg_length) <= 1e-10 * scaled.leg_length);
    CHECK(std::abs(scaled.q1 - k * base.q1) <= 1e-10 * std::abs(scaled.q1));
    CHECK(std::abs(scaled.q2 - k * base.q2) <= 1e-10 * scaled.q2);
    CHECK(std::abs(scaled.base_offset - k * base.base_offset) <=
          1e-10 * std::abs(scaled.base_offset));
    CHECK(std::abs(scaled.rho_max - k * base.rho_max) <= 1e-10 * scaled.rho_max);
  }
}

TEST_CASE("binding constraints at the synthesized corners") {
  for (double psi : {1.5, 2.0}) {
    MechanismGeometry g = synthesize({200.0, psi, 0.0});
    auto at_q1 = transmission(g, g.cube_lo()).psi;
    auto at_q2 = transmission(g, g.cube_hi()).psi;
    // Q1: the diagonal factor hits the upper bound.
    CHECK(std::abs(at_q1[2] - psi) < 1e-9);
    // Q2: the diagonal factor hits the lower bound.
    CHECK(std::abs(at_q2[0] - 1.0 / psi) < 1e-9);
  }
  // At psi_max = 2 both Q2 bounds bind simultaneously: (1/2, 2, 2).
  MechanismGeometry g = synthesize({200.0, 2.0, 0.0});
  auto psi2 = transmission(g, g.cube_hi()).psi;
  CHECK(std::abs(psi2[0] - 0.5) < 1e-9);
  CHECK(std::abs(psi2[1] - 2.0) < 1e-9);
  CHECK(std::abs(psi2[2] - 2.0) < 1e-9);
}

TEST_CASE("extremality verification over the cube grid") {
  MechanismGeometry g = synthesize({200.0, 2.0, 0.0});
  ExtremalityReport rep = verify_extremality(g, 2.0, 21);
  CHECK(rep.ok);
  CHECK(rep.extrema_at_corners);
  CHECK(!rep.low_resolution);
  CHECK(rep.violations.empty());
  CHECK(rep.psi_max_observed == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(rep.psi_min_observed == doctest::Approx(0.5).epsilon(1e-9));

  // Corners-only grid passes trivially but is flagged.
  rep = verify_extremality(g, 2.0, 2);
  CHECK(rep.ok);
  CHECK(rep.low_resolution);

  // A leg 10% too short violates the bounds near Q2.
  MechanismGeometry tampered = g;
  tampered.leg_length *= 0.9;
  rep = verify_extremality(tampered, 2.0, 21);
  CHECK(!rep.ok);
  REQUIRE(!rep.violations.empty());
  const auto& v = rep.violations.front();
  CHECK((v.psi[0] < 0.5 - 1e-6 || v.psi[2] > 2.0 + 1e-6));
}

TEST_CASE("designs above psi_max = 2 still verify on a desk-scale grid") {
  for (double psi : {2.5, 3.0}) {
    MechanismGeometry g = synthesize({200.0, psi, 0.0});
    ExtremalityReport rep = verify_extremality(g, psi, 11);
    CHECK(rep.ok);
  }
}

TEST_CASE("invalid requirements are rejected") {
  CHECK_THROWS_AS(synthesize({-1.0, 2.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(synthesize({200.0, 2.0, -5.0}), std::invalid_argument);
  CHECK_THROWS_AS(synthesize({200.0, 1.0, 0.0}), Error);
}
