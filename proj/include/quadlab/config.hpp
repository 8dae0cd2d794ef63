#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "quadlab/env.hpp"
#include "quadlab/ppo.hpp"

namespace quadlab {

struct EvalConfig {
  double duration = 10.0;         // s
  int repeats = 3;                // episodes per magnitude, all must survive
  std::uint64_t seed = 1000;      // evaluation seed base
  double push_start = 2.0;        // s
  double push_duration = 5.0;     // s
  double speed_window = 5.0;      // s, trailing window for the mean forward speed

  void validate() const;
};

struct RunConfig {
  std::string name = "run";
  std::string robot_model_path;  // empty when the model was given inline
  EnvConfig env;
  PPOConfig ppo;
  EvalConfig eval;
  std::vector<std::uint64_t> seeds{1};
  std::string output_dir = "runs";
  nlohmann::json resolved;  // merged config with the robot model inlined

  void validate() const;
};

/// Loads a run config. "include" entries (paths relative to the including
/// file) are merged first, in order; the file's own keys override them.
/// Unknown keys are rejected with a ConfigError naming the key.
RunConfig load_run_config(const std::string& path);
RunConfig run_config_from_json(const nlohmann::json& merged, const std::string& base_dir);
/// Reads a file, resolves includes recursively and returns the merged document.
nlohmann::json load_config_json(const std::string& path);

/// Serializes every field, with the robot model inlined; feeding the result
/// back to run_config_from_json reproduces the config.
nlohmann::json run_config_to_json(const RunConfig& cfg);

void merge_json(nlohmann::json& base, const nlohmann::json& overlay);

}  // namespace quadlab
