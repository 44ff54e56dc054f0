#include "screwcal/algebra.hpp"

#include <atomic>
#include <cmath>

namespace screwcal {

namespace diag {
namespace {
std::atomic<double> g_unit_drift{0.0};
}

double unit_drift_max() { return g_unit_drift.load(std::memory_order_relaxed); }

void reset_unit_drift() { g_unit_drift.store(0.0, std::memory_order_relaxed); }

void record_unit_drift(double d) {
  double cur = g_unit_drift.load(std::memory_order_relaxed);
  while (cur < d && !g_unit_drift.compare_exchange_weak(cur, d, std::memory_order_relaxed)) {
  }
}
}  // namespace diag

namespace series {

namespace {
constexpr double kTaylorCut = 1e-4;
}

double sinc(double t) {
  const double t2 = t * t;
  if (std::abs(t) < kTaylorCut) return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
  return std::sin(t) / t;
}

double versine(double t) {
  const double t2 = t * t;
  if (std::abs(t) < kTaylorCut) return 0.5 - t2 / 24.0 + t2 * t2 / 720.0;
  return (1.0 - std::cos(t)) / t2;
}

double sinc3(double t) {
  const double t2 = t * t;
  if (std::abs(t) < kTaylorCut) return 1.0 / 6.0 - t2 / 120.0 + t2 * t2 / 5040.0;
  return (t - std::sin(t)) / (t2 * t);
}

}  // namespace series

Mat3 Skew3::matrix() const {
  Mat3 m;
  m << 0.0, -axis.z(), axis.y(),  //
      axis.z(), 0.0, -axis.x(),   //
      -axis.y(), axis.x(), 0.0;
  return m;
}

Vec3 skew_axis(const Mat3& m, double tol) {
  const double defect = (m + m.transpose()).cwiseAbs().maxCoeff();
  if (defect > tol) {
    throw NotSkew("skew_axis: ||M + M^T|| = " + std::to_string(defect) +
                  " exceeds tol = " + std::to_string(tol));
  }
  // Axis of the skew part (exact for skew input).
  return 0.5 * Vec3(m(2, 1) - m(1, 2), m(0, 2) - m(2, 0), m(1, 0) - m(0, 1));
}

Mat3 rotation_exp(const Vec3& x) {
  const double t = x.norm();
  const Mat3 k = cross_operator(x).matrix();
  // Rodrigues: exp(C_x) = I + sinc(t) C_x + versine(t) C_x^2.
  return Mat3::Identity() + series::sinc(t) * k + series::versine(t) * (k * k);
}

UnitQuaternion quat_exp(const Vec3& xi) {
  const double t = xi.norm();
  Quaternion q{std::cos(t), series::sinc(t) * xi};
  return UnitQuaternion(q);
}

Mat3 conjugation_rotation(const UnitQuaternion& q) {
  Mat3 m;
  m.col(0) = q.rotate(Vec3::UnitX());
  m.col(1) = q.rotate(Vec3::UnitY());
  m.col(2) = q.rotate(Vec3::UnitZ());
  return m;
}

}  // namespace screwcal
