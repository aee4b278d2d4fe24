#pragma once

#include <complex>

#include <Eigen/Dense>

namespace wg {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat5 = Eigen::Matrix<double, 5, 5>;

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

// Structural validations (metric, involution, lightlike tests) use this
// unless the caller passes an explicit tolerance.
inline constexpr double kDefaultTolerance = 1e-9;

// Minkowski metric diag(+1, -1, -1, -1).
inline Mat4 metric()
{
  return Eigen::Vector4d(1.0, -1.0, -1.0, -1.0).asDiagonal();
}

}  // namespace wg
