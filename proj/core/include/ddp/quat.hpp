#pragma once

#include "ddp/linalg.hpp"

namespace ddp {

// Quaternions are [w, x, y, z] with w the scalar part (Hamilton convention).

/// Hamilton product q1 (x) q2. Non-unit quaternions are accepted.
Eigen::Vector4d quat_mul(const Eigen::Vector4d& q1, const Eigen::Vector4d& q2);

/// Rotation matrix of q; q is normalized first.
Eigen::Matrix3d quat_to_rot(const Eigen::Vector4d& q);

/// Skew-symmetric matrix [v]_x with cross_mat(v) * w = v x w.
Eigen::Matrix3d cross_mat(const Eigen::Vector3d& v);

}  // namespace ddp
