#pragma once

#include <Eigen/Dense>
#include <vector>

#include "leonav/time.hpp"

namespace leonav {

/// 9D navigation state: ENU position/velocity plus Euler attitude
/// [roll, pitch, yaw]. Yaw is measured from local East toward North, so a
/// user facing north carries yaw = pi/2.
struct NavState {
    Eigen::Vector3d p_enu = Eigen::Vector3d::Zero();
    Eigen::Vector3d v_enu = Eigen::Vector3d::Zero();
    Eigen::Vector3d theta = Eigen::Vector3d::Zero();  // roll, pitch, yaw (rad)
    UtcTime t = 0.0;
};

using Trajectory = std::vector<NavState>;

using Vector9d = Eigen::Matrix<double, 9, 1>;
using Matrix9d = Eigen::Matrix<double, 9, 9>;
using RowVector9d = Eigen::Matrix<double, 1, 9>;

/// Pack a state into the 9-vector [p, v, theta] used by filter algebra.
Vector9d nav_to_vector(const NavState& s);
NavState nav_from_vector(const Vector9d& x, UtcTime t);

}  // namespace leonav
