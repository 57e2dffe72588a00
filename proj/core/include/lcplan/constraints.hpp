#pragma once

#include <Eigen/Dense>

#include <array>

#include "lcplan/vehicle_model.hpp"

namespace lcplan {

using Vector6d = Eigen::Matrix<double, 6, 1>;
using Matrix6d = Eigen::Matrix<double, 6, 6>;

/// Elliptical keep-out region of a surrounding vehicle.
struct ObstacleEllipse {
  Eigen::Vector2d center = Eigen::Vector2d::Zero();
  double yaw = 0.0;
  double half_long_axis = 2.25;   ///< along the vehicle heading [m]
  double half_short_axis = 0.9;   ///< across the vehicle heading [m]

  void validate() const;
};

struct SafetyConfig {
  double margin = 0.1;  ///< extra inflation of the ellipse axes [m]
};

/// Exponential-barrier shape: value = q1 * exp(-q2 * residual).
struct BarrierParams {
  double q1 = 1.0;  ///< scale [cost]
  double q2 = 5.0;  ///< steepness [1 / residual unit]

  void validate() const;
};

/// Signed residual of one inequality constraint with its gradient over the
/// stacked stage variables [px, py, v, theta, a, theta_dot].
/// residual >= 0 holds exactly when the constraint is satisfied.
struct ConstraintResidual {
  double value = 0.0;
  Vector6d gradient = Vector6d::Zero();
};

/// Ellipse containment residual of one ego circle against one obstacle:
///   (x/(a+re+s))^2 + (y/(b+re+s))^2 - 1
/// evaluated in the obstacle frame (rotation through the obstacle yaw).
ConstraintResidual safety_residual(const VehicleState& ego_state, const EgoParams& ego,
                                   const ObstacleEllipse& obstacle, const SafetyConfig& cfg,
                                   Axle axle);

/// Value-only variant for hot loops.
double safety_residual_value(const VehicleState& ego_state, const EgoParams& ego,
                             const ObstacleEllipse& obstacle, const SafetyConfig& cfg,
                             Axle axle);

/// The four mechanical-bound residuals in order:
///   a - a_min, a_max - a, theta_dot - theta_dot_min(v), theta_dot_max(v) - theta_dot.
/// Yaw-rate bounds depend on the stage speed, so those residuals carry a
/// state component in their gradients.
std::array<ConstraintResidual, 4> control_bound_residuals(const ControlInput& control,
                                                          const VehicleState& state,
                                                          const EgoParams& ego);

std::array<double, 4> control_bound_values(const ControlInput& control,
                                           const VehicleState& state, const EgoParams& ego);

/// Barrier cost of one residual together with its Gauss-Newton
/// quadratization over the stage variables. The hessian keeps only the
/// gradient outer product, so it is positive semidefinite by construction.
struct BarrierTerm {
  double value = 0.0;
  Vector6d gradient = Vector6d::Zero();
  Matrix6d hessian = Matrix6d::Zero();
};

BarrierTerm barrier(const ConstraintResidual& residual, const BarrierParams& params);

inline double barrier_value(double residual, const BarrierParams& params) {
  return params.q1 * std::exp(-params.q2 * residual);
}

}  // namespace lcplan
