#pragma once

#include <cstdint>
#include <deque>

#include "quadlab/common.hpp"
#include "quadlab/robot_model.hpp"

namespace quadlab {

struct PDGains {
  Vec12 kp = Vec12::Constant(40.0);  // N m/rad
  Vec12 kd = Vec12::Constant(0.5);   // N m s/rad

  static PDGains uniform(double kp, double kd);
  void validate() const;
};

struct JointLimits {
  Vec12 lower = Vec12::Constant(-M_PI);
  Vec12 upper = Vec12::Constant(M_PI);

  static JointLimits from_model(const RobotModel& model);
};

/// j_d = residual + reference, clamped to the joint limits.
Vec12 compose_target(const Vec12& residual, const Vec12& reference, const JointLimits& limits);

/// First-order low-pass on the joint targets: out = (1 - lambda) prev + lambda in.
struct FilterState {
  Vec12 previous = Vec12::Zero();
  double lambda = 1.0;

  Vec12 apply(const Vec12& input);
};

/// FIFO of timestamped targets emulating command latency. Timestamps are kept
/// in integer microseconds so that buffer arithmetic is exact.
class LatencyBuffer {
 public:
  explicit LatencyBuffer(double latency_s = 0.0);

  void reset(double t, const Vec12& initial_target);
  /// Timestamps must not decrease; a push at the newest timestamp replaces that entry.
  void push(double t, const Vec12& target);
  /// Newest entry with timestamp <= now - latency, or the oldest entry if none qualifies.
  const Vec12& read(double now) const;

  void set_latency(double latency_s);
  double latency() const { return static_cast<double>(latency_us_) * 1e-6; }
  std::size_t size() const { return entries_.size(); }

 private:
  struct Entry {
    std::int64_t t_us;
    Vec12 target;
  };
  std::deque<Entry> entries_;
  std::int64_t latency_us_ = 0;
};

/// tau = kp (j_d - j) - kd jdot, clamped to +-torque_limit.
Vec12 pd_torque(const Vec12& target, const Vec12& j, const Vec12& jdot, const PDGains& gains, double torque_limit);

struct ControlConfig {
  double kp = 40.0;
  double kd = 0.5;
  int policy_rate_hz = 40;
  int pd_rate_hz = 500;
  double filter_lambda = 0.2;  // used only in hardware-emulation mode
  double latency_ms = 0.0;
  double residual_clamp_rad = 1.0;
  bool hardware_emulation = false;
  int hardware_target_rate_hz = 250;

  void validate() const;
  /// Rate at which new targets enter the pipeline (policy rate, or the
  /// faster target refresh in hardware-emulation mode).
  int target_rate_hz() const { return hardware_emulation ? hardware_target_rate_hz : policy_rate_hz; }
  double pd_dt() const { return 1.0 / pd_rate_hz; }
};

/// Integer schedule of target updates on the PD clock: tick i carries a new
/// target iff floor(i r / R) advances (r = target rate, R = PD rate).
class ControlSchedule {
 public:
  ControlSchedule(int target_rate_hz, int pd_rate_hz);
  bool is_update_tick(std::int64_t tick) const;
  /// Number of PD ticks from the update at `tick` up to (excluding) the next one.
  int ticks_until_next_update(std::int64_t tick) const;

 private:
  std::int64_t target_rate_;
  std::int64_t pd_rate_;
};

/// Per-environment pipeline from residual actions to joint torques:
/// compose -> (filter) -> latency FIFO -> PD.
class ControlStack {
 public:
  ControlStack(const ControlConfig& config, const RobotModel& model);

  void reset(double t, const Vec12& initial_target);
  void set_policy_action(double t, const Vec12& residual, const Vec12& reference);
  Vec12 torque(double t, const Vec12& j, const Vec12& jdot) const;
  /// Target the PD law uses at time t.
  const Vec12& applied_target(double t) const { return latency_.read(t); }

  void set_kp(double kp);
  void set_latency_ms(double latency_ms);
  const PDGains& gains() const { return gains_; }
  const ControlConfig& config() const { return config_; }
  const ControlSchedule& schedule() const { return schedule_; }

 private:
  ControlConfig config_;
  PDGains gains_;
  JointLimits limits_;
  double torque_limit_;
  FilterState filter_;
  LatencyBuffer latency_;
  ControlSchedule schedule_;
};

}  // namespace quadlab
