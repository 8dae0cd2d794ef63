#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quadlab/config.hpp"
#include "quadlab/env.hpp"
#include "quadlab/ppo.hpp"

namespace quadlab {

class Policy {
 public:
  virtual ~Policy() = default;
  /// Residual action for a raw observation.
  virtual Vec12 act(const Eigen::VectorXd& obs) const = 0;
};

/// Deterministic (mean) action of a trained actor-critic.
class NetworkPolicy : public Policy {
 public:
  explicit NetworkPolicy(ActorCritic ac) : ac_(std::move(ac)) {}
  Vec12 act(const Eigen::VectorXd& obs) const override { return ac_.act_deterministic(obs); }
  const ActorCritic& network() const { return ac_; }

 private:
  ActorCritic ac_;
};

/// Always outputs zero residual, so the robot follows the reference through PD.
class ZeroPolicy : public Policy {
 public:
  Vec12 act(const Eigen::VectorXd&) const override { return Vec12::Zero(); }
};

struct EvalSetup {
  EnvConfig env;  // randomization disabled, one gait
  EvalConfig eval;
};

/// Evaluation environment for a run: nominal dynamics, the given gait (the
/// first configured gait when absent), optional hardware-emulation mode.
EvalSetup make_eval_setup(const RunConfig& cfg, std::optional<GaitSpec> gait = std::nullopt,
                          bool hardware_emulation = false);

/// Environment config with the perturbation applied (physics parts, gain
/// override, added latency, push window).
EnvConfig perturbed_env(const EvalSetup& setup, const PerturbationSpec& spec);

struct EpisodeOutcome {
  bool survived = false;
  double mean_forward_speed = 0.0;  // m/s over the trailing speed window (or what was survived of it)
  double mean_lateral_speed = 0.0;  // m/s, same window
  double tracking_rms = 0.0;        // rad, RMS of (j_d - j) over all joints and PD ticks
  std::optional<double> fall_time;  // s, absent iff survived
  bool fault = false;
};

/// Per-tick hook for logging: time, state, PD target, torques.
using TickObserver = std::function<void(const SimState&, const Vec12&, const Vec12&)>;

/// One deterministic episode. The seed selects the initial-state noise stream.
EpisodeOutcome run_single_episode(const Policy& policy, const EnvConfig& env, const EvalConfig& eval,
                                  std::uint64_t seed, const TickObserver& observer = nullptr);

/// n_repeats episodes (distinct evaluation seeds, shared across magnitudes);
/// survived only if all survive. Speeds and RMS are averaged, the fall time is
/// the earliest one. Episodes run in parallel workers.
EpisodeOutcome run_episode(const Policy& policy, const EvalSetup& setup, const std::optional<PerturbationSpec>& perturbation,
                           int n_repeats, std::vector<EpisodeOutcome>* per_episode = nullptr);

struct SearchSpec {
  double lo = 0.0;
  double hi = 0.0;
  double resolution = 1.0;
};

/// Default bounds and resolution per kind. For pgain the search starts at hi
/// (the nominal gain) and walks down.
SearchSpec default_search(PerturbationKind kind, double nominal_kp = 40.0);
bool search_descends(PerturbationKind kind);

enum class SearchMethod { Bisection, GridScan };

struct ThresholdResult {
  PerturbationKind kind = PerturbationKind::MassAdd;
  double value = 0.0;      // last surviving magnitude; the start value when below_lo
  bool below_lo = false;   // the easy end of the search already fails
  bool at_limit = false;   // the far end of the search still survives
  bool monotone = true;    // only meaningful for grid scans
  int evaluations = 0;
  std::vector<std::pair<double, bool>> evaluated;  // (magnitude, survived) in evaluation order
};

/// Searches the grid start, start +- k*resolution, ... for the last surviving
/// magnitude. Bisection assumes monotone survival; the grid scan checks it and
/// keeps the first transition (the conservative one).
ThresholdResult find_threshold(const std::function<bool(double)>& survives, PerturbationKind kind,
                               const SearchSpec& search, SearchMethod method = SearchMethod::Bisection);

ThresholdResult find_threshold(const Policy& policy, const EvalSetup& setup, PerturbationKind kind,
                               const SearchSpec& search, SearchMethod method = SearchMethod::Bisection);

struct Aggregate {
  double mean = 0.0;
  std::optional<double> std;  // sample std (n - 1); absent for n = 1
  int n = 0;
};

Aggregate aggregate_seeds(const std::vector<double>& values);

/// Thresholds of one policy variant: kind -> per-seed results.
struct VariantThresholds {
  std::string name;
  std::map<PerturbationKind, std::vector<ThresholdResult>> per_kind;
};

struct RobustnessReport {
  std::vector<PerturbationKind> kinds;
  std::vector<VariantThresholds> variants;

  Aggregate aggregate(const std::string& variant, PerturbationKind kind) const;
  void write_csv(std::ostream& out) const;
  void write_aggregate_csv(std::ostream& out) const;
  /// Text table: one row per variant, one column per kind, "mean +- std".
  void write_table(std::ostream& out) const;
};

std::string column_title(PerturbationKind kind);

struct TrackingSample {
  double t = 0.0;
  std::array<double, kNumLegs> hip_target{};
  std::array<double, kNumLegs> hip_actual{};
};

struct TrackingReport {
  Vec12 rms = Vec12::Zero();  // per joint, rad
  double overall_rms = 0.0;   // over all joints
  bool survived = false;
  std::vector<TrackingSample> series;  // hip pitch joints, every PD tick

  void write_csv(std::ostream& out) const;
};

TrackingReport tracking_error_report(const Policy& policy, const EvalSetup& setup, std::uint64_t seed);

/// Evaluates a policy in a different environment (e.g. other contact
/// parameters, latency or mass), one outcome per evaluation seed.
std::vector<EpisodeOutcome> sim_to_sim_transfer(const Policy& policy, const EvalSetup& target,
                                                const std::vector<std::uint64_t>& seeds);

struct SpeedSearchResult {
  double max_speed = 0.0;  // highest commanded speed passing, 0 if none
  bool none_passed = false;
  std::vector<std::pair<double, bool>> evaluated;
};

/// Highest commanded forward speed on the grid [lo, hi] at which the policy
/// survives all repeats and reaches at least min_speed_fraction of the command.
SpeedSearchResult max_commanded_speed(const Policy& policy, const EvalSetup& setup, const SearchSpec& speeds,
                                      double min_speed_fraction);

}  // namespace quadlab
