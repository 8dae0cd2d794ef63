#pragma once

#include <vector>

#include "quadlab/common.hpp"

namespace quadlab {

enum class GaitType : int { Walk = 0, Trot = 1, Pace = 2 };
enum class LegRole { Stance, Swing };

GaitType gait_type_from_string(const std::string& name);
std::string to_string(GaitType gait);

struct GaitSpec {
  GaitType gait = GaitType::Trot;
  double phase_duration = 0.3;  // T_p, s
  double desired_speed = 0.5;   // forward, m/s

  int num_phases() const;
  double period() const { return num_phases() * phase_duration; }
  int index() const { return static_cast<int>(gait); }
  void validate() const;
};

using PhaseRoles = std::array<LegRole, kNumLegs>;

struct PhaseState {
  int phase_index = 0;
  double elapsed = 0.0;  // rho, s
  PhaseRoles roles{};
};

/// Ordered phases of one gait cycle with per-leg roles.
std::vector<PhaseRoles> contact_sequence(GaitType gait);

PhaseState phase_at(const GaitSpec& spec, double t);

/// [hip abduction, hip pitch, knee] reference for one leg. Throws
/// std::out_of_range if rho lies outside [0, T_p].
Vec3 reference_joint_angles(LegRole role, double rho, double phase_duration, double desired_speed);
/// Time derivative of reference_joint_angles with respect to rho.
Vec3 reference_joint_rates(LegRole role, double rho, double phase_duration, double desired_speed);

/// Stance pose [0, 0.65, -1] replicated over the four legs.
Vec12 stance_pose();

struct ReferenceState {
  Vec3 p = Vec3::Zero();
  Quat o = Quat::Identity();
  Vec12 j = Vec12::Zero();
  Vec3 pdot = Vec3::Zero();
  Vec3 omega = Vec3::Zero();
  Vec12 jdot = Vec12::Zero();
};

/// Constant-speed body reference plus per-leg joint references at time t.
/// standing_height is the body height h0 of the reference.
ReferenceState reference_state(const GaitSpec& spec, double t, double standing_height);

/// (cos 2 pi t / T, sin 2 pi t / T)
std::array<double, 2> phase_clock(double t, double period);

}  // namespace quadlab
