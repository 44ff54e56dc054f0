#pragma once

#include <Eigen/Dense>

#include "screwcal/errors.hpp"

namespace screwcal {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat43 = Eigen::Matrix<double, 4, 3>;

/// Quaternion w + x i + y j + z k with the imaginary part kept as a Vec3.
/// Plain value type; not assumed to be unit.
struct Quaternion {
  double w = 1.0;
  Vec3 v = Vec3::Zero();

  static Quaternion real(double a) { return {a, Vec3::Zero()}; }
  static Quaternion pure(const Vec3& u) { return {0.0, u}; }

  double norm2() const { return w * w + v.squaredNorm(); }
  double norm() const { return std::sqrt(norm2()); }
  Quaternion conj() const { return {w, -v}; }
  Vec4 as_vec4() const { return Vec4(w, v.x(), v.y(), v.z()); }
  static Quaternion from_vec4(const Vec4& a) { return {a(0), Vec3(a(1), a(2), a(3))}; }
};

inline Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.w + b.w, a.v + b.v};
}
inline Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.w - b.w, a.v - b.v};
}
inline Quaternion operator*(double s, const Quaternion& a) { return {s * a.w, s * a.v}; }

/// Hamilton product.
inline Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.v.dot(b.v), a.w * b.v + b.w * a.v + a.v.cross(b.v)};
}

namespace diag {
/// Largest | |q|^2 - 1 | observed on UnitQuaternion construction since the
/// last reset. Unit quaternions renormalize eagerly; this records how far a
/// multiplication chain had drifted beforehand.
double unit_drift_max();
void reset_unit_drift();
void record_unit_drift(double d);
}  // namespace diag

/// Quaternion constrained to |q| = 1. Renormalizes on construction and after
/// every product, recording the pre-normalization drift in diagnostics.
class UnitQuaternion {
 public:
  UnitQuaternion() : q_{1.0, Vec3::Zero()} {}
  explicit UnitQuaternion(const Quaternion& q) : q_(q) {
    const double n2 = q_.norm2();
    diag::record_unit_drift(std::abs(n2 - 1.0));
    const double n = std::sqrt(n2);
    q_.w /= n;
    q_.v /= n;
  }

  const Quaternion& quat() const { return q_; }
  double w() const { return q_.w; }
  const Vec3& im() const { return q_.v; }
  UnitQuaternion conj() const {
    UnitQuaternion r;
    r.q_ = q_.conj();
    return r;
  }
  UnitQuaternion operator-() const {
    UnitQuaternion r;
    r.q_ = {-q_.w, -q_.v};
    return r;
  }

  /// I_q(x) = q x q̄ for an imaginary x; stays imaginary.
  Vec3 rotate(const Vec3& x) const { return (q_ * Quaternion::pure(x) * q_.conj()).v; }

 private:
  Quaternion q_;
};

inline UnitQuaternion operator*(const UnitQuaternion& a, const UnitQuaternion& b) {
  return UnitQuaternion(a.quat() * b.quat());
}

/// Skew symmetric 3x3 operator C_xi(y) = xi x y, stored by its axis so the
/// skewness is exact by construction.
struct Skew3 {
  Vec3 axis = Vec3::Zero();
  Mat3 matrix() const;
};

inline Vec3 cross(const Vec3& a, const Vec3& b) { return a.cross(b); }

inline Skew3 cross_operator(const Vec3& xi) { return Skew3{xi}; }

/// Axis of (the skew part of) M. Throws NotSkew if ||M + M^T|| exceeds tol.
Vec3 skew_axis(const Mat3& m, double tol = 1e-9);

/// exp(C_x): the rotation through angle |x| around the oriented axis x.
Mat3 rotation_exp(const Vec3& x);

/// cos|xi| + sin|xi| xi/|xi|, the unit quaternion one-parameter subgroup.
UnitQuaternion quat_exp(const Vec3& xi);

/// Matrix of x -> q x q̄ on the imaginary quaternions.
Mat3 conjugation_rotation(const UnitQuaternion& q);

namespace series {
// Even scalar functions with removable singularities at 0; 4th-order Taylor
// below |t| = 1e-4 to avoid the 0/0 blowup.
double sinc(double t);         // sin(t)/t
double versine(double t);      // (1 - cos t)/t^2
double sinc3(double t);        // (t - sin t)/t^3
}  // namespace series

}  // namespace screwcal
