#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quadlab/gait.hpp"
#include "quadlab/physics.hpp"
#include "quadlab/rng.hpp"

namespace quadlab {

struct ObservationConfig {
  bool include_base_velocity = true;
  bool use_estimator = false;
  double gyro_noise = 0.0;            // rad/s
  double accel_noise = 0.0;           // m/s^2
  double encoder_noise = 0.0;         // rad
  double joint_velocity_noise = 0.0;  // rad/s
  double lateral_offset = 0.0;        // m/s, added to the reported body-y velocity
  double yaw_offset = 0.0;            // rad, rotates the reported orientation about world z

  void validate() const;
};

/// 40 with base velocity, 37 without.
int observation_dim(const ObservationConfig& cfg);
/// Entry names in observation order.
std::vector<std::string> observation_layout(const ObservationConfig& cfg);
/// FNV-1a hash of the layout names; stored in checkpoints.
std::uint64_t observation_layout_hash(const ObservationConfig& cfg);

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

/// Kalman filter state over [world base velocity (3), terrain-relative base height (1)].
struct EstimatorState {
  Vec4 mean = Vec4::Zero();
  Mat4 cov = Mat4::Identity() * 1e-4;
  double yaw_offset = 0.0;                                // rad
  Eigen::Vector2d velocity_offset = Eigen::Vector2d::Zero();  // body (forward, lateral), m/s
  int faults = 0;                                         // rejected updates

  Vec3 velocity() const { return mean.head<3>(); }
  double height() const { return mean[3]; }
};

/// Estimator seeded from a known state (episode start).
EstimatorState initial_estimate(const SimState& state, const WorldConfig& world);

/// Layout: [p_z, o(4, w >= 0), j(12), pdot(3, body)?, omega(3, body), jdot(12),
/// cos phi, sin phi, gait index, 1/T_p, desired speed]. With use_estimator the
/// velocity and height come from est; the steering offsets always apply.
Eigen::VectorXd build_observation(const SimState& state, const GaitSpec& spec, double t, const ObservationConfig& cfg,
                                  const EstimatorState& est, const WorldConfig& world);

EstimatorState apply_steering_offsets(EstimatorState est, double lateral_offset, double yaw_offset);

struct ImuReading {
  Vec3 accel = Vec3::Zero();  // specific force, body frame
  Vec3 gyro = Vec3::Zero();   // body frame
};

struct LegOdometry {
  Vec3 velocity = Vec3::Zero();  // world-frame base velocity implied by stance feet
  double height = 0.0;           // base height above the stance feet
  int num_contacts = 0;
};

struct KalmanNoise {
  double process_velocity = 1e-4;  // (m/s)^2 per second
  double process_height = 1e-6;    // m^2 per second
  double measurement_velocity = 0.0;
  double measurement_height = 0.0;

  static KalmanNoise from_config(const ObservationConfig& cfg);
};

/// Predict with the gravity-compensated accelerometer, then correct with the
/// leg-odometry pseudo-measurement when at least one foot is in contact. An
/// update that produces a non-PSD covariance is discarded (prior kept) and
/// counted in est.faults.
EstimatorState kalman_step(const EstimatorState& est, const ImuReading& imu, const Quat& attitude,
                           const LegOdometry& odometry, double dt, const KalmanNoise& noise, double gravity = 9.81);

struct SensorReadings {
  ImuReading imu;
  Vec12 j = Vec12::Zero();
  Vec12 jdot = Vec12::Zero();
  LegOdometry odometry;
};

/// Simulated proprioception. prev_pdot is the world base velocity one PD tick
/// earlier (for the accelerometer). Contacts come from the simulator's flags.
SensorReadings emulate_sensors(const SimState& state, const Vec3& prev_pdot, double dt, const RobotModel& model,
                               const ObservationConfig& cfg, double gravity, Rng& rng);

}  // namespace quadlab
