#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "quadlab/common.hpp"
#include "quadlab/robot_model.hpp"

namespace quadlab {

struct FootContact {
  bool in_contact = false;
  double normal_force = 0.0;           // N, >= 0
  Vec3 tangential_force = Vec3::Zero();  // N, world frame
};

/// Floating-base state. Velocities are world-frame: pdot is the base-origin
/// velocity and omega the base angular velocity.
struct SimState {
  Vec3 p = Vec3::Zero();
  Quat o = Quat::Identity();
  Vec12 j = Vec12::Zero();
  Vec3 pdot = Vec3::Zero();
  Vec3 omega = Vec3::Zero();
  Vec12 jdot = Vec12::Zero();
  double t = 0.0;
  std::array<FootContact, kNumLegs> contacts{};

  bool all_finite() const;
};

struct ExternalPush {
  double force = 0.0;       // N along +y (lateral), applied at the base COM
  double start_time = 0.0;  // s
  double duration = 0.0;    // s

  bool active_at(double t) const { return force != 0.0 && t >= start_time && t < start_time + duration; }
};

struct WorldConfig {
  double gravity = 9.81;               // m/s^2, pointing down
  double slope_angle_deg = 0.0;        // ground rotated about the lateral axis; positive rises along +x
  double friction_coefficient = 0.6;
  double contact_stiffness = 30000.0;  // N/m
  double contact_damping = 1000.0;     // N s/m
  double tangential_damping = 3000.0;  // N s/m, viscous stick below the friction cone
  ExternalPush push{};
  bool conserve_momentum = true;       // project base velocity onto the exact momentum update

  void validate() const;
  Vec3 ground_normal() const;
  /// Height of the ground plane at horizontal location (x, y).
  double ground_height(double x) const;
};

/// Explicit evaluation of the penalty law at the current state. A foot is in
/// contact iff it penetrates the ground and the penalty force is positive.
std::array<FootContact, kNumLegs> detect_contacts(const SimState& state, const RobotModel& model,
                                                  const WorldConfig& world);

/// Advances the dynamics by dt with constant joint torques. Torques are
/// clamped to the model's limit. Throws SimulationFault on non-finite input or
/// output.
SimState step(const SimState& state, const Vec12& joint_torques, const RobotModel& model, const WorldConfig& world,
              double dt = 0.002);

enum class PerturbationKind { MassAdd, PGainAbs, Latency, LateralPush, SlopeUp, SlopeDown };

inline constexpr std::array<PerturbationKind, 6> kAllPerturbationKinds = {
    PerturbationKind::MassAdd,     PerturbationKind::PGainAbs, PerturbationKind::Latency,
    PerturbationKind::LateralPush, PerturbationKind::SlopeUp,  PerturbationKind::SlopeDown};

std::string to_string(PerturbationKind kind);
/// Accepts the canonical names (mass, pgain, latency, push, slope_up, slope_down).
PerturbationKind perturbation_kind_from_string(const std::string& name);

struct PerturbationSpec {
  PerturbationKind kind = PerturbationKind::MassAdd;
  double magnitude = 0.0;
  double push_start = 2.0;     // s
  double push_duration = 5.0;  // s
};

/// Result of apply_perturbation: the physical parts are applied; gain and
/// latency are only recorded for the control stack.
struct PerturbedSetup {
  RobotModel model;
  WorldConfig world;
  std::optional<double> kp_override;   // N m/rad
  std::optional<double> latency_ms;
};

PerturbedSetup apply_perturbation(const RobotModel& model, const WorldConfig& world, const PerturbationSpec& spec);

// ---- diagnostics used by tests and the trajectory dump ----

struct MomentumInfo {
  double mass = 0.0;
  Vec3 com = Vec3::Zero();
  Vec3 linear = Vec3::Zero();
  Vec3 angular_about_com = Vec3::Zero();
};

MomentumInfo compute_momentum(const SimState& state, const RobotModel& model);
/// Kinetic + gravitational potential + contact spring energy.
double mechanical_energy(const SimState& state, const RobotModel& model, const WorldConfig& world);
std::array<Vec3, kNumLegs> foot_positions_world(const SimState& state, const RobotModel& model);
/// World-frame foot velocities.
std::array<Vec3, kNumLegs> foot_velocities_world(const SimState& state, const RobotModel& model);
/// Joint-space mass matrix (18x18, base block first: angular, linear).
MatN mass_matrix(const SimState& state, const RobotModel& model);

/// One row per control step: t, p, o, j, pdot, omega, jdot, contacts, torques.
class TrajectoryWriter {
 public:
  explicit TrajectoryWriter(std::ostream& out);
  void write(const SimState& state, const Vec12& torques);

 private:
  std::ostream& out_;
};

}  // namespace quadlab
