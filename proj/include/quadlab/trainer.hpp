#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "quadlab/config.hpp"
#include "quadlab/ppo.hpp"

namespace quadlab {

struct Checkpoint {
  ActorCritic policy;
  std::uint64_t layout_hash = 0;
  std::vector<std::string> layout;
  int iteration = 0;
  std::uint64_t seed = 0;
  nlohmann::json config;  // resolved run config
};

nlohmann::json checkpoint_to_json(const Checkpoint& ckpt);
Checkpoint checkpoint_from_json(const nlohmann::json& j);
void save_checkpoint(const Checkpoint& ckpt, const std::string& path);
/// Throws ConfigError if the file is missing or malformed.
Checkpoint load_checkpoint(const std::string& path);
/// Throws ConfigError when the checkpoint was trained on a different observation layout.
void check_layout(const Checkpoint& ckpt, const ObservationConfig& obs);

struct IterationLog {
  int iteration = 0;
  double mean_step_reward = 0.0;
  double mean_episode_return = 0.0;  // NaN when no episode finished
  double mean_episode_length = 0.0;
  int episodes = 0;
  double fall_rate = 0.0;
  UpdateDiagnostics update;
  double seconds = 0.0;
};

/// Deterministic CSV columns (wall-clock time is not logged).
void write_log_header(std::ostream& out);
void write_log_row(std::ostream& out, const IterationLog& row);

struct TrainOptions {
  int workers = 0;
  bool verbose = false;
  /// When >= 0, overrides the configured iteration count.
  int iterations = -1;
  std::function<void(const IterationLog&)> on_iteration;
};

struct TrainResult {
  Checkpoint final;
  std::vector<IterationLog> curve;
  bool diverged = false;
  std::string checkpoint_path;
};

/// Trains one policy. Writes into out_dir: resolved_config.json,
/// training_log.csv, episodes.csv, policy_iter_<k>.json every
/// ppo.checkpoint_every iterations and policy_final.json.
TrainResult train(const RunConfig& cfg, std::uint64_t seed, const std::string& out_dir, const TrainOptions& opt = {});

}  // namespace quadlab
