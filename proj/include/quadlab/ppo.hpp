#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "quadlab/nn.hpp"
#include "quadlab/rng.hpp"

namespace quadlab {

struct PPOConfig {
  double clip = 0.2;
  double gamma = 0.99;
  double gae_lambda = 0.95;
  double learning_rate = 3e-4;
  bool anneal_learning_rate = false;  // linear decay to zero over the iteration budget
  int epochs = 5;
  int minibatch_size = 512;
  double value_coef = 0.5;
  double max_grad_norm = 1.0;
  int iterations = 300;
  int num_envs = 64;
  int horizon = 150;
  double log_std = -2.5;
  int hidden_size = 128;
  int checkpoint_every = 50;

  void validate() const;
};

/// Running mean/variance of observations (parallel Welford merge).
class RunningNormalizer {
 public:
  RunningNormalizer() = default;
  explicit RunningNormalizer(int dim);

  /// One sample per column.
  void update(const Eigen::MatrixXd& samples);
  Eigen::VectorXd normalize(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd normalize_batch(const Eigen::MatrixXd& x) const;

  int dim() const { return static_cast<int>(mean_.size()); }
  const Eigen::VectorXd& mean() const { return mean_; }
  const Eigen::VectorXd& var() const { return var_; }
  double count() const { return count_; }
  void set(const Eigen::VectorXd& mean, const Eigen::VectorXd& var, double count);

  static constexpr double kClip = 10.0;

 private:
  Eigen::VectorXd mean_;
  Eigen::VectorXd var_;
  double count_ = 0.0;
};

/// Gaussian policy with state-independent fixed std plus a separate value
/// network. The value network predicts returns divided by value_scale.
struct ActorCritic {
  Mlp policy;
  Mlp value;
  double log_std = -2.5;
  double value_scale = 100.0;
  RunningNormalizer normalizer;

  ActorCritic() = default;
  ActorCritic(int obs_dim, int action_dim, int hidden, double log_std, double value_scale);
  void init(Rng& rng);

  int obs_dim() const { return policy.input_dim(); }
  int action_dim() const { return policy.output_dim(); }
  double sigma() const;

  /// Action mean for a normalized observation.
  Eigen::VectorXd policy_forward(const Eigen::VectorXd& normalized_obs) const;
  double value_forward(const Eigen::VectorXd& normalized_obs) const;
  /// Deterministic action for a raw observation (normalizer applied).
  Eigen::VectorXd act_deterministic(const Eigen::VectorXd& raw_obs) const;
};

struct SampledAction {
  Eigen::VectorXd action;
  double log_prob = 0.0;
};

double gaussian_log_prob(const Eigen::VectorXd& action, const Eigen::VectorXd& mean, double log_std);
SampledAction sample_action(const Eigen::VectorXd& mean, double log_std, Rng& rng, bool deterministic = false);

struct EpisodeRecord {
  int env = 0;
  double tracking_return = 0.0;  // sum of per-step tracking rewards
  int length = 0;                // policy steps
  bool fell = false;
  double mass_scale = 1.0;
  double inertia_scale = 1.0;
  double pgain_delta = 0.0;
  double latency_ms = 0.0;
};

/// N environments x H steps; sample (env e, step t) lives at column e*H + t.
struct RolloutBatch {
  int num_envs = 0;
  int horizon = 0;
  Eigen::MatrixXd raw_obs;
  Eigen::MatrixXd obs;  // normalized with the collecting policy's statistics
  Eigen::MatrixXd actions;
  Eigen::VectorXd log_probs;
  Eigen::VectorXd rewards;           // includes time-limit bootstrap
  Eigen::VectorXd tracking_rewards;  // tracking reward only
  Eigen::VectorXd values;
  std::vector<std::uint8_t> dones;
  Eigen::VectorXd last_values;  // V(s_H) per env
  std::vector<EpisodeRecord> episodes;

  RolloutBatch() = default;
  RolloutBatch(int num_envs, int horizon, int obs_dim, int action_dim);
  int size() const { return num_envs * horizon; }
  int index(int env, int t) const { return env * horizon + t; }
};

struct GaeResult {
  Eigen::VectorXd raw_advantages;
  Eigen::VectorXd advantages;  // normalized to zero mean, unit std
  Eigen::VectorXd returns;     // raw_advantages + values
};

GaeResult gae_advantages(const RolloutBatch& batch, double gamma, double lambda);

struct LossTerms {
  double policy_loss = 0.0;
  double value_loss = 0.0;
  double total = 0.0;
  double clip_fraction = 0.0;
  double approx_kl = 0.0;
  double mean_ratio = 0.0;
  double max_ratio_error = 0.0;  // max |ratio - 1|
};

/// Clipped surrogate + value regression on the selected samples. Gradients are
/// written (not accumulated) when the output pointers are non-null.
LossTerms ppo_loss(const ActorCritic& ac, const RolloutBatch& batch, const GaeResult& gae,
                   const std::vector<int>& indices, const PPOConfig& cfg, Eigen::VectorXd* policy_grad,
                   Eigen::VectorXd* value_grad);

struct UpdateDiagnostics {
  LossTerms first;  // first minibatch of the first epoch
  LossTerms mean;   // averaged over all minibatches
  double grad_norm = 0.0;
  bool aborted = false;
  int minibatches = 0;
};

struct Optimizers {
  Adam policy;
  Adam value;
};

Optimizers make_optimizers(const ActorCritic& ac, const PPOConfig& cfg);

/// cfg.epochs passes over the batch in shuffled minibatches. A non-finite loss
/// or gradient restores the parameters from before the call and sets aborted.
UpdateDiagnostics ppo_update(ActorCritic& ac, Optimizers& opt, const RolloutBatch& batch, const GaeResult& gae,
                             const PPOConfig& cfg, Rng& rng);

}  // namespace quadlab
