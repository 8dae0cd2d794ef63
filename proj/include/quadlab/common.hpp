#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <array>
#include <stdexcept>
#include <string>

namespace quadlab {

inline constexpr int kNumLegs = 4;
inline constexpr int kJointsPerLeg = 3;
inline constexpr int kNumJoints = kNumLegs * kJointsPerLeg;
inline constexpr int kNumLinks = 1 + kNumJoints;
inline constexpr int kNumDofs = 6 + kNumJoints;

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Vec12 = Eigen::Matrix<double, kNumJoints, 1>;
using VecN = Eigen::Matrix<double, kNumDofs, 1>;
using MatN = Eigen::Matrix<double, kNumDofs, kNumDofs>;
using Quat = Eigen::Quaterniond;

// Leg order used everywhere: front-left, front-right, hind-left, hind-right.
enum class Leg : int { FL = 0, FR = 1, HL = 2, HR = 3 };

inline constexpr std::array<const char*, kNumLegs> kLegNames = {"FL", "FR", "HL", "HR"};

inline int joint_index(int leg, int joint) { return leg * kJointsPerLeg + joint; }

/// Invalid configuration or model description. The message names the offending field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical divergence inside the simulator (non-finite state or input).
class SimulationFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Mat3 skew(const Vec3& v) {
  Mat3 m;
  m << 0.0, -v.z(), v.y(), v.z(), 0.0, -v.x(), -v.y(), v.x(), 0.0;
  return m;
}

}  // namespace quadlab
