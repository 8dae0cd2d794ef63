#pragma once

#include "quadlab/rng.hpp"
#include "quadlab/robot_model.hpp"

namespace quadlab {

struct ParameterRange {
  double lo = 0.0;
  double hi = 0.0;
  bool enabled = false;

  /// Effective range: [nominal, nominal] when disabled.
  std::array<double, 2> effective(double nominal) const;
};

/// Per-episode dynamics randomization. Defaults mirror the full-randomization
/// ranges but are disabled.
struct RandomizationConfig {
  ParameterRange mass_scale{0.8, 1.2, false};     // multiplicative, all links
  ParameterRange inertia_scale{0.5, 1.5, false};  // multiplicative, all links
  ParameterRange pgain_delta{-20.0, 20.0, false}; // N m/rad, additive
  ParameterRange latency_ms{0.0, 20.0, false};    // absolute

  void validate() const;
  bool any_enabled() const;
  static RandomizationConfig none() { return {}; }
  static RandomizationConfig full();
  static RandomizationConfig latency_only();
};

struct SampledDynamics {
  double mass_scale = 1.0;
  double inertia_scale = 1.0;
  double pgain_delta = 0.0;
  double latency_ms = 0.0;
};

/// Draws all four parameters uniformly and independently. The same number of
/// engine draws is consumed regardless of which entries are enabled.
SampledDynamics sample_dynamics(const RandomizationConfig& cfg, Rng& rng);

/// Model with every link mass and inertia scaled.
RobotModel scale_dynamics(const RobotModel& nominal, double mass_scale, double inertia_scale);

/// nominal_kp + delta; a non-positive result becomes 1 N m/rad and sets *clamped.
double randomized_kp(double nominal_kp, double delta, bool* clamped = nullptr);

}  // namespace quadlab
