#pragma once

#include <string>
#include <vector>

#include "quadlab/harness.hpp"
#include "quadlab/trainer.hpp"

namespace quadlab {

/// Where variant configs live and where trained policies are cached:
/// <runs_dir>/<variant>/seed_<s>/policy_final.json.
struct ArtifactStore {
  std::string config_dir = "config";
  std::string runs_dir = "runs";
  int workers = 0;
  bool verbose = true;
  bool train_missing = true;
  bool hardware_emulation = false;     // evaluation mode
  std::optional<double> eval_duration;  // overrides evaluation.duration
};

/// Config file of a named policy variant (e.g. "trot_default" -> config/trot_default.json).
std::string variant_config_path(const ArtifactStore& store, const std::string& variant);
RunConfig load_variant(const ArtifactStore& store, const std::string& variant);

/// Loads the cached policy of each seed, training it first when missing or
/// when the cached checkpoint was produced by a different config.
std::vector<Checkpoint> obtain_policies(const ArtifactStore& store, const std::string& variant,
                                        const std::vector<std::uint64_t>& seeds);

/// Evaluation setup for a variant honoring the store's evaluation overrides.
EvalSetup variant_eval_setup(const ArtifactStore& store, const RunConfig& cfg);

struct AblationSpec {
  std::string name;
  std::string description;
  std::vector<std::string> variants;  // first entry is the reference row
};

const std::vector<AblationSpec>& ablation_specs();
/// Throws ConfigError listing the valid names.
const AblationSpec& ablation_spec(const std::string& name);

struct DirectionalCheck {
  std::string id;  // acceptance id (A5..A8) or "info"
  std::string description;
  bool passed = false;
  std::string detail;
  bool acceptance = false;
};

struct AblationResult {
  RobustnessReport report;
  std::vector<DirectionalCheck> checks;
  std::string notes;  // extra measurements (tracking RMS, max speeds)
  bool all_acceptance_passed() const;
};

/// Thresholds for every seed of a variant.
VariantThresholds sweep_variant(const ArtifactStore& store, const std::string& variant,
                                const std::vector<Checkpoint>& policies, const std::vector<PerturbationKind>& kinds);

AblationResult run_ablation(const std::string& name, const ArtifactStore& store, const std::vector<std::uint64_t>& seeds,
                            const std::vector<PerturbationKind>& kinds);

// ---- directional checks, shared by the ablations and the acceptance suite ----

/// Latency threshold of the latency-randomized policy >= 1.2x the baseline's (means over seeds).
DirectionalCheck check_latency_randomization(const RobustnessReport& report, const std::string& baseline,
                                             const std::string& randomized);
/// Push threshold without velocity feedback <= 0.75x the default's.
DirectionalCheck check_velocity_feedback(const RobustnessReport& report, const std::string& baseline,
                                         const std::string& no_velocity);
/// Max commanded speed of the randomized policy strictly below the nominal one's.
DirectionalCheck check_speed_conservatism(const std::vector<double>& nominal_speeds,
                                          const std::vector<double>& randomized_speeds);
/// Tracking RMS at low gain > high gain.
DirectionalCheck check_tracking_rms(const std::vector<double>& low_gain_rms, const std::vector<double>& high_gain_rms);
/// Push threshold of the high-gain policy <= 0.6x the low-gain one's.
DirectionalCheck check_high_gain_push(const RobustnessReport& report, const std::string& low_gain,
                                      const std::string& high_gain);

/// Max-speed search used for the speed conservatism comparison.
SearchSpec default_speed_search();
inline constexpr double kSpeedTrackingFraction = 0.5;

struct TrainingSuccess {
  int survived = 0;
  int episodes = 0;
  double mean_speed = 0.0;  // mean over surviving episodes of the trailing-window forward speed
  double commanded = 0.0;
  std::vector<EpisodeOutcome> outcomes;
};

/// Evaluates a trained policy on nominal dynamics over n evaluation seeds.
TrainingSuccess evaluate_training_success(const Checkpoint& ckpt, const EvalSetup& setup, int n_seeds);

}  // namespace quadlab
