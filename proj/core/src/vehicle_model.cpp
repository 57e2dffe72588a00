#include "lcplan/vehicle_model.hpp"

#include <stdexcept>

namespace lcplan {

double normalize_angle(double angle) {
  double a = std::fmod(angle + M_PI, 2.0 * M_PI);
  if (a <= 0.0) {
    a += 2.0 * M_PI;
  }
  return a - M_PI;
}

void EgoParams::validate() const {
  if (!(wheelbase > 0.0)) throw std::invalid_argument("EgoParams: wheelbase must be > 0");
  if (!(circle_radius > 0.0)) throw std::invalid_argument("EgoParams: circle_radius must be > 0");
  if (!(a_min < 0.0 && 0.0 < a_max)) throw std::invalid_argument("EgoParams: need a_min < 0 < a_max");
  if (!(delta_min < 0.0 && 0.0 < delta_max))
    throw std::invalid_argument("EgoParams: need delta_min < 0 < delta_max");
}

Eigen::Vector4d derivative(const VehicleState& state, const ControlInput& control) {
  return {state.v * std::cos(state.theta), state.v * std::sin(state.theta), control.a,
          control.theta_dot};
}

VehicleState step(const VehicleState& state, const ControlInput& control, double dt) {
  const Eigen::Vector4d xdot = derivative(state, control);
  VehicleState next;
  next.px = state.px + dt * xdot(0);
  next.py = state.py + dt * xdot(1);
  next.v = state.v + dt * xdot(2);
  next.theta = normalize_angle(state.theta + dt * xdot(3));
  return next;
}

Linearization linearize(const VehicleState& state, const ControlInput& /*control*/, double dt) {
  const double c = std::cos(state.theta);
  const double s = std::sin(state.theta);
  Linearization lin;
  lin.A = Eigen::Matrix4d::Identity();
  lin.A(0, 2) = dt * c;
  lin.A(0, 3) = -dt * state.v * s;
  lin.A(1, 2) = dt * s;
  lin.A(1, 3) = dt * state.v * c;
  lin.B.setZero();
  lin.B(2, 0) = dt;
  lin.B(3, 1) = dt;
  return lin;
}

EgoCircles ego_circles(const VehicleState& state, const EgoParams& params) {
  EgoCircles circles;
  circles.rear = {state.px, state.py};
  circles.front = {state.px + params.wheelbase * std::cos(state.theta),
                   state.py + params.wheelbase * std::sin(state.theta)};
  circles.radius = params.circle_radius;
  return circles;
}

YawRateBounds yaw_rate_bounds(double v, const EgoParams& params) {
  return {v * std::tan(params.delta_min) / params.wheelbase,
          v * std::tan(params.delta_max) / params.wheelbase};
}

Trajectory rollout(const VehicleState& x0, const std::vector<ControlInput>& controls,
                   double dt) {
  Trajectory traj;
  traj.dt = dt;
  traj.controls = controls;
  traj.states.reserve(controls.size() + 1);
  traj.states.push_back(x0);
  for (const ControlInput& u : controls) {
    traj.states.push_back(step(traj.states.back(), u, dt));
  }
  return traj;
}

std::array<Eigen::Vector2d, 4> OrientedBox::corners() const {
  const double c = std::cos(yaw);
  const double s = std::sin(yaw);
  const Eigen::Vector2d ax{c, s};
  const Eigen::Vector2d ay{-s, c};
  const Eigen::Vector2d half_l = 0.5 * length * ax;
  const Eigen::Vector2d half_w = 0.5 * width * ay;
  return {center + half_l + half_w, center + half_l - half_w, center - half_l - half_w,
          center - half_l + half_w};
}

Eigen::Vector2d ego_body_center(const VehicleState& state, const EgoParams& params) {
  const double half_wb = 0.5 * params.wheelbase;
  return {state.px + half_wb * std::cos(state.theta),
          state.py + half_wb * std::sin(state.theta)};
}

OrientedBox ego_footprint(const VehicleState& state, const EgoParams& params) {
  return {ego_body_center(state, params), state.theta, params.length, params.width};
}

}  // namespace lcplan
