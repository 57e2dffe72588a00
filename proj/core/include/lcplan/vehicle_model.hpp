#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <vector>

namespace lcplan {

/// Wraps an angle to (-pi, pi].
double normalize_angle(double angle);

/// Radius of the two circles that jointly cover a length x width rectangle
/// when placed a quarter length from either end.
inline double covering_circle_radius(double length, double width) {
  return std::hypot(length / 4.0, width / 2.0);
}

/// Kinematic bicycle state [px, py, v, theta]. The position refers to the
/// rear-axle center for the ego vehicle and to the body center for
/// surrounding vehicles.
struct VehicleState {
  double px = 0.0;     ///< longitudinal position [m]
  double py = 0.0;     ///< lateral position [m]
  double v = 0.0;      ///< speed [m/s]
  double theta = 0.0;  ///< yaw angle [rad], normalized to (-pi, pi]

  Eigen::Vector4d vec() const { return {px, py, v, theta}; }
  static VehicleState from_vec(const Eigen::Vector4d& x) {
    return {x(0), x(1), x(2), x(3)};
  }
};

/// Ego control input [a, theta_dot].
struct ControlInput {
  double a = 0.0;          ///< acceleration [m/s^2]
  double theta_dot = 0.0;  ///< yaw rate [rad/s]

  Eigen::Vector2d vec() const { return {a, theta_dot}; }
  static ControlInput from_vec(const Eigen::Vector2d& u) { return {u(0), u(1)}; }
};

/// Geometry and mechanical limits of the ego vehicle.
struct EgoParams {
  double wheelbase = 2.8;  ///< rear to front axle [m]
  double length = 4.5;     ///< body length [m]
  double width = 1.8;      ///< body width [m]
  /// Radius of the two covering circles placed at the axle centers [m].
  double circle_radius = covering_circle_radius(4.5, 1.8);
  double a_min = -4.0;      ///< acceleration lower bound [m/s^2]
  double a_max = 2.0;       ///< acceleration upper bound [m/s^2]
  double delta_min = -0.6;  ///< steering angle lower bound [rad]
  double delta_max = 0.6;   ///< steering angle upper bound [rad]

  /// Throws std::invalid_argument when an invariant is broken.
  void validate() const;
};

/// A fixed-step horizon of N+1 states and N controls.
struct Trajectory {
  std::vector<VehicleState> states;
  std::vector<ControlInput> controls;
  double dt = 0.1;

  int horizon() const { return static_cast<int>(controls.size()); }
};

/// Continuous dynamics xdot = [v cos(theta), v sin(theta), a, theta_dot].
Eigen::Vector4d derivative(const VehicleState& state, const ControlInput& control);

/// One explicit-Euler step; yaw is re-normalized to (-pi, pi].
VehicleState step(const VehicleState& state, const ControlInput& control, double dt);

/// Jacobians of the Euler step map: A = d(step)/dx, B = d(step)/du.
struct Linearization {
  Eigen::Matrix4d A;
  Eigen::Matrix<double, 4, 2> B;
};
Linearization linearize(const VehicleState& state, const ControlInput& control, double dt);

/// The two covering circles of the ego body, centered on the axles.
struct EgoCircles {
  Eigen::Vector2d front;
  Eigen::Vector2d rear;
  double radius = 0.0;
};
EgoCircles ego_circles(const VehicleState& state, const EgoParams& params);

enum class Axle { Front, Rear };

/// Velocity-dependent yaw-rate limits v*tan(delta)/L.
struct YawRateBounds {
  double lo = 0.0;
  double hi = 0.0;
};
YawRateBounds yaw_rate_bounds(double v, const EgoParams& params);

/// Repeated step() from x0; the produced trajectory satisfies
/// states[i+1] == step(states[i], controls[i], dt) bit-exactly.
Trajectory rollout(const VehicleState& x0, const std::vector<ControlInput>& controls,
                   double dt);

/// Oriented rectangle footprint used by the ground-truth collision check.
struct OrientedBox {
  Eigen::Vector2d center = Eigen::Vector2d::Zero();
  double yaw = 0.0;
  double length = 0.0;
  double width = 0.0;

  std::array<Eigen::Vector2d, 4> corners() const;
};

/// Body center of the ego vehicle (wheelbase midpoint; overhangs are
/// assumed symmetric).
Eigen::Vector2d ego_body_center(const VehicleState& state, const EgoParams& params);

/// Footprint rectangle of the ego vehicle.
OrientedBox ego_footprint(const VehicleState& state, const EgoParams& params);

}  // namespace lcplan
