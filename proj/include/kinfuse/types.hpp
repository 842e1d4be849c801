#pragma once

#include <Eigen/Dense>

namespace kinfuse {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using VecX = Eigen::VectorXd;
using MatX = Eigen::MatrixXd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

/// Cross-product matrix: skew(v) * u == v.cross(u).
Mat3 skew(const Vec3& v);

/// Rodrigues rotation about a unit axis.
Mat3 rotation_about(const Vec3& unit_axis, double angle);

/// Exponential map so(3) -> SO(3).
Mat3 so3_exp(const Vec3& w);

/// Logarithm map SO(3) -> so(3), returns theta * axis in [0, pi].
Vec3 so3_log(const Mat3& R);

/// Orthonormal with unit determinant within tol.
bool is_rotation(const Mat3& R, double tol = 1e-10);

/// Filter estimand x = (q, qdot, tau).
struct StateVector {
  VecX q;
  VecX qdot;
  VecX tau;

  StateVector() = default;
  explicit StateVector(int dof)
      : q(VecX::Zero(dof)), qdot(VecX::Zero(dof)), tau(VecX::Zero(dof)) {}
  StateVector(VecX q_, VecX qdot_, VecX tau_);

  int dof() const { return static_cast<int>(q.size()); }
  bool all_finite() const;

  /// Packed as (q, qdot, tau), length 3*dof.
  VecX flat() const;
  static StateVector from_flat(const VecX& x);
};

}  // namespace kinfuse
