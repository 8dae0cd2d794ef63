#pragma once

#include "quadlab/gait.hpp"
#include "quadlab/physics.hpp"

namespace quadlab {

struct RewardWeights {
  double joint = 0.4;
  double position = 0.3;
  double orientation = 0.3;
};

struct RewardBreakdown {
  double joint = 0.0;        // r_j
  double position = 0.0;     // r_p
  double orientation = 0.0;  // r_o
  double total = 0.0;
};

/// Tracking reward. The orientation rate term uses the angular velocity
/// difference; the state quaternion is sign-aligned with the reference first.
RewardBreakdown compute_reward(const SimState& x, const ReferenceState& ref, const RewardWeights& w = {});

struct BalanceCriteria {
  double min_height = 0.15;    // m above the ground plane under the base
  double max_tilt_deg = 60.0;  // |roll| and |pitch|
};

/// Roll and pitch (ZYX Euler convention) of a unit quaternion, radians.
std::array<double, 2> roll_pitch(const Quat& o);

/// Single definition of "balanced", shared by training termination and the
/// robustness harness.
bool is_balanced(const SimState& x, const WorldConfig& world, const BalanceCriteria& criteria = {});

}  // namespace quadlab
