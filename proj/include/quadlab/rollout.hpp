#pragma once

#include <vector>

#include "quadlab/env.hpp"
#include "quadlab/ppo.hpp"

namespace quadlab {

struct EnvSlot {
  LocomotionEnv env;
  Rng action_rng;
  Eigen::VectorXd obs;
  double episode_return = 0.0;
  int episode_length = 0;
};

/// N environments. Environment i draws dynamics from stream kEnvStreamBase + 2i
/// and action noise from kEnvStreamBase + 2i + 1 of the run seed.
class EnvPool {
 public:
  EnvPool(const EnvConfig& config, int num_envs, std::uint64_t seed);
  int size() const { return static_cast<int>(slots_.size()); }
  EnvSlot& slot(int i) { return slots_[i]; }
  const EnvSlot& slot(int i) const { return slots_[i]; }

 private:
  std::vector<EnvSlot> slots_;
};

struct RolloutOptions {
  int horizon = 150;
  double gamma = 0.99;  // for the time-limit bootstrap
  bool deterministic = false;
  int workers = 0;  // 0: OpenMP default
};

/// OpenMP over environments; bit-identical to collect_rollouts_serial.
RolloutBatch collect_rollouts(const ActorCritic& ac, EnvPool& pool, const RolloutOptions& opt);
/// Reference implementation, one environment after another.
RolloutBatch collect_rollouts_serial(const ActorCritic& ac, EnvPool& pool, const RolloutOptions& opt);

}  // namespace quadlab
