#include "kinfuse/types.hpp"

#include <cmath>
#include <stdexcept>

namespace kinfuse {

Mat3 skew(const Vec3& v) {
  Mat3 s;
  s << 0, -v.z(), v.y(), v.z(), 0, -v.x(), -v.y(), v.x(), 0;
  return s;
}

Mat3 rotation_about(const Vec3& unit_axis, double angle) {
  const Mat3 k = skew(unit_axis);
  return Mat3::Identity() + std::sin(angle) * k + (1.0 - std::cos(angle)) * (k * k);
}

Mat3 so3_exp(const Vec3& w) {
  const double theta = w.norm();
  if (theta < 1e-12) {
    const Mat3 k = skew(w);
    return Mat3::Identity() + k + 0.5 * (k * k);
  }
  return rotation_about(w / theta, theta);
}

Vec3 so3_log(const Mat3& R) {
  const double c = std::clamp((R.trace() - 1.0) / 2.0, -1.0, 1.0);
  const double theta = std::acos(c);
  const Vec3 w(R(2, 1) - R(1, 2), R(0, 2) - R(2, 0), R(1, 0) - R(0, 1));
  if (theta < 1e-8) {
    return 0.5 * w;
  }
  if (theta > kPi - 1e-6) {
    // Near pi the off-diagonal difference vanishes; recover the axis from R + I.
    const Mat3 a = 0.5 * (R + Mat3::Identity());
    int k = 0;
    a.diagonal().maxCoeff(&k);
    Vec3 axis = a.col(k);
    axis /= std::sqrt(std::max(a(k, k), 1e-16));
    axis.normalize();
    if (axis.dot(w) < 0.0) axis = -axis;
    return theta * axis;
  }
  return (theta / (2.0 * std::sin(theta))) * w;
}

bool is_rotation(const Mat3& R, double tol) {
  const double ortho = (R.transpose() * R - Mat3::Identity()).cwiseAbs().maxCoeff();
  return ortho <= tol && std::abs(R.determinant() - 1.0) <= tol;
}

StateVector::StateVector(VecX q_, VecX qdot_, VecX tau_)
    : q(std::move(q_)), qdot(std::move(qdot_)), tau(std::move(tau_)) {
  if (q.size() != qdot.size() || q.size() != tau.size()) {
    throw std::invalid_argument("StateVector: q, qdot, tau must have equal length");
  }
}

bool StateVector::all_finite() const {
  return q.allFinite() && qdot.allFinite() && tau.allFinite();
}

VecX StateVector::flat() const {
  const int n = dof();
  VecX x(3 * n);
  x.segment(0, n) = q;
  x.segment(n, n) = qdot;
  x.segment(2 * n, n) = tau;
  return x;
}

StateVector StateVector::from_flat(const VecX& x) {
  if (x.size() % 3 != 0) {
    throw std::invalid_argument("StateVector::from_flat: length must be divisible by 3");
  }
  const int n = static_cast<int>(x.size()) / 3;
  return StateVector(x.segment(0, n), x.segment(n, n), x.segment(2 * n, n));
}

}  // namespace kinfuse
