#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

#include "quadlab/common.hpp"

namespace quadlab {

/// One rigid link. The base (index 0) is floating; every other link hangs
/// off its parent through a revolute joint whose frame origin is the joint.
struct Link {
  std::string name;
  int parent = -1;
  Vec3 joint_origin = Vec3::Zero();  // in parent frame
  Vec3 joint_axis = Vec3::UnitX();   // unit, in parent frame
  double mass = 0.0;                 // kg
  Vec3 com = Vec3::Zero();           // in link frame
  Mat3 inertia = Mat3::Zero();       // about the COM, link frame, kg m^2
  double lower_limit = 0.0;          // rad
  double upper_limit = 0.0;          // rad
  double armature = 0.0;             // reflected rotor inertia, kg m^2
};

struct FootPoint {
  int link = -1;
  Vec3 offset = Vec3::Zero();  // in link frame, m
};

struct RobotModel {
  std::string name;
  std::vector<Link> links;  // kNumLinks, parents before children
  std::array<FootPoint, kNumLegs> feet{};
  double torque_limit = 33.5;   // N m, symmetric per joint
  double base_mass_delta = 0.0;  // kg added to the base (payload perturbation)

  double total_mass() const;
  /// Base mass including the payload perturbation.
  double base_mass() const;
  /// Mass / inertia of link i as the simulator sees it (payload included).
  double link_mass(int i) const;
  Mat3 link_inertia(int i) const;

  double joint_lower(int joint) const { return links[joint + 1].lower_limit; }
  double joint_upper(int joint) const { return links[joint + 1].upper_limit; }
};

/// Validates and builds a model from the documented JSON schema (see
/// config/nominal_robot.json). Throws ConfigError naming the bad field.
RobotModel load_robot_model(const nlohmann::json& config);
RobotModel load_robot_model_file(const std::filesystem::path& path);
nlohmann::json robot_model_to_json(const RobotModel& model);

/// Foot positions relative to the base origin, expressed in the base frame,
/// for the given joint angles.
std::array<Vec3, kNumLegs> feet_in_base_frame(const RobotModel& model, const Vec12& joints);

/// Height of the base origin above flat ground when all feet touch the
/// ground with a level base at the given joint angles.
double standing_height(const RobotModel& model, const Vec12& joints);

}  // namespace quadlab
