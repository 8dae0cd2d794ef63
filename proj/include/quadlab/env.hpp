#pragma once

#include <functional>
#include <vector>

#include "quadlab/control.hpp"
#include "quadlab/gait.hpp"
#include "quadlab/observation.hpp"
#include "quadlab/physics.hpp"
#include "quadlab/randomization.hpp"
#include "quadlab/reward.hpp"
#include "quadlab/rng.hpp"

namespace quadlab {

struct InitNoise {
  double joint = 0.05;          // rad, uniform +-
  double base_velocity = 0.05;  // m/s, uniform +- on x and y
};

struct EnvConfig {
  RobotModel model;
  WorldConfig world;
  ControlConfig control;
  ObservationConfig observation;
  std::vector<GaitSpec> gaits{GaitSpec{}};  // one is drawn per episode
  RandomizationConfig randomization;
  BalanceCriteria balance;
  RewardWeights reward_weights;
  InitNoise init_noise;
  double episode_duration = 10.0;  // s

  void validate() const;
};

struct StepResult {
  Eigen::VectorXd obs;
  RewardBreakdown reward;
  bool terminated = false;  // fell or simulator fault
  bool truncated = false;   // reached the episode duration
  bool fault = false;
};

/// One simulated robot with its control stack, estimator and RNG stream.
/// step() consumes one policy action and advances the PD clock until the next
/// target update.
class LocomotionEnv {
 public:
  LocomotionEnv(EnvConfig config, Rng rng);

  Eigen::VectorXd reset();
  StepResult step(const Vec12& action);

  const SimState& state() const { return state_; }
  const GaitSpec& gait() const { return gait_; }
  const SampledDynamics& dynamics() const { return dynamics_; }
  const EnvConfig& config() const { return config_; }
  const ControlStack& control() const { return control_; }
  const EstimatorState& estimator() const { return estimator_; }
  double time() const { return state_.t; }
  bool done() const { return done_; }
  /// True when the last reset had to clamp a randomized gain.
  bool kp_clamped() const { return kp_clamped_; }
  double standing_height() const { return h0_; }

  void set_estimator(const EstimatorState& est) { estimator_ = est; }

  /// Called after every PD tick with the new state, the target the PD law
  /// used, and the applied torques.
  std::function<void(const SimState&, const Vec12&, const Vec12&)> on_tick;

 private:
  Eigen::VectorXd observe() const;

  EnvConfig config_;
  Rng rng_;
  RobotModel model_;
  ControlStack control_;
  SimState state_;
  GaitSpec gait_;
  SampledDynamics dynamics_;
  EstimatorState estimator_;
  KalmanNoise kalman_noise_;
  Vec12 sensed_j_ = Vec12::Zero();
  Vec12 sensed_jdot_ = Vec12::Zero();
  Vec3 sensed_omega_ = Vec3::Zero();
  std::int64_t tick_ = 0;
  std::int64_t episode_ticks_ = 0;
  double h0_ = 0.0;
  bool done_ = true;
  bool kp_clamped_ = false;
};

}  // namespace quadlab
