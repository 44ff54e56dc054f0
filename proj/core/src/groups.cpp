#include "screwcal/groups.hpp"

#include <cmath>
#include <string>

namespace screwcal {

namespace series {

namespace {
constexpr double kTaylorCut = 1e-4;
}

double sinhc(double t) {
  const double t2 = t * t;
  if (std::abs(t) < kTaylorCut) return 1.0 + t2 / 6.0 + t2 * t2 / 120.0;
  return std::sinh(t) / t;
}

double coshm1(double t) {
  const double t2 = t * t;
  if (std::abs(t) < kTaylorCut) return 0.5 + t2 / 24.0 + t2 * t2 / 720.0;
  return (std::cosh(t) - 1.0) / t2;
}

}  // namespace series

SpinMotion operator*(const SpinMotion& g, const SpinMotion& h) {
  return {g.x + g.q.rotate(h.x), g.q * h.q};
}

EuclideanMotion operator*(const EuclideanMotion& g, const EuclideanMotion& h) {
  return {g.x + g.A * h.x, g.A * h.A};
}

EuclideanMotion covering_pi(const SpinMotion& g) {
  return {g.x, conjugation_rotation(g.q)};
}

SpinTangent left_diff_spin(const SpinMotion& g, const Vec3& xi, const Vec3& eta) {
  return {g.q.rotate(xi), g.q.quat() * Quaternion::pure(eta)};
}

std::pair<Vec3, Vec3> pull_spin_to_identity(const SpinMotion& g, const SpinTangent& v) {
  const UnitQuaternion pc = g.q.conj();
  const Quaternion eta = pc.quat() * v.q;
  return {pc.rotate(v.x), eta.v};
}

SpinMotion exp_spin(const Vec3& xi, const Vec3& eta) {
  const Vec3 omega = 2.0 * eta;
  const double w = omega.norm();
  const Mat3 c = cross_operator(omega).matrix();
  const Mat3 v = Mat3::Identity() + series::versine(w) * c + series::sinc3(w) * (c * c);
  return {v * xi, quat_exp(eta)};
}

Mat4 LieElementZ::matrix() const {
  Mat4 m = Mat4::Zero();
  m.block<3, 1>(1, 0) = x;
  m.block<1, 3>(0, 1) = -static_cast<double>(kappa) * x.transpose();
  m.block<3, 3>(1, 1) = cross_operator(xi).matrix();
  return m;
}

LieElementZ z_unpack(int kappa, const Mat4& m, double tol) {
  const Vec3 x = m.block<3, 1>(1, 0);
  const Vec3 expected_row = -static_cast<double>(kappa) * x;
  double defect = std::abs(m(0, 0));
  defect = std::max(defect, (m.block<1, 3>(0, 1).transpose() - expected_row).cwiseAbs().maxCoeff());
  const Mat3 lower = m.block<3, 3>(1, 1);
  defect = std::max(defect, (lower + lower.transpose()).cwiseAbs().maxCoeff());
  if (defect > tol) {
    throw NotLieElement("z_unpack: pattern defect " + std::to_string(defect) + " exceeds tol");
  }
  return {kappa, x, Vec3(lower(2, 1), lower(0, 2), lower(1, 0))};
}

LieElementZ z_project(int kappa, const Mat4& m) {
  Vec3 x = m.block<3, 1>(1, 0);
  if (kappa != 0) {
    x = 0.5 * (x - static_cast<double>(kappa) * m.block<1, 3>(0, 1).transpose());
  }
  const Mat3 lower = m.block<3, 3>(1, 1);
  const Mat3 skew = 0.5 * (lower - lower.transpose());
  return {kappa, x, Vec3(skew(2, 1), skew(0, 2), skew(1, 0))};
}

LieElementZ bracket_z(const LieElementZ& a, const LieElementZ& b) {
  if (a.kappa != b.kappa) {
    throw KappaMismatch("bracket_z: kappa " + std::to_string(a.kappa) + " vs " +
                        std::to_string(b.kappa));
  }
  const double k = static_cast<double>(a.kappa);
  return {a.kappa, a.xi.cross(b.x) - b.xi.cross(a.x), k * a.x.cross(b.x) + a.xi.cross(b.xi)};
}

Mat4 j_matrix(int kappa) {
  Mat4 j = Mat4::Identity();
  j(0, 0) = static_cast<double>(kappa);
  return j;
}

Vec4 embed_point(int kappa, const Vec3& p) {
  (void)kappa;
  return Vec4(1.0, p.x(), p.y(), p.z());
}

IsometryG IsometryG::from_euclid(const EuclideanMotion& e) {
  Mat4 m = Mat4::Identity();
  m.block<3, 1>(1, 0) = e.x;
  m.block<3, 3>(1, 1) = e.A;
  return {0, m};
}

EuclideanMotion IsometryG::to_euclid() const {
  if (kappa != 0) throw Error("to_euclid: isometry is not Euclidean");
  return {g.block<3, 1>(1, 0), g.block<3, 3>(1, 1)};
}

IsometryG IsometryG::inverse() const {
  if (kappa == 0) {
    const Mat3 at = g.block<3, 3>(1, 1).transpose();
    Mat4 m = Mat4::Identity();
    m.block<3, 3>(1, 1) = at;
    m.block<3, 1>(1, 0) = -(at * g.block<3, 1>(1, 0));
    return {0, m};
  }
  const Mat4 j = j_matrix(kappa);
  // g^T J g = J  =>  g^{-1} = J^{-1} g^T J, and J^{-1} = J for kappa = ±1.
  return {kappa, j * g.transpose() * j};
}

double IsometryG::invariant_defect() const {
  if (kappa == 0) {
    double d = std::abs(g(0, 0) - 1.0);
    d = std::max(d, g.block<1, 3>(0, 1).cwiseAbs().maxCoeff());
    const Mat3 a = g.block<3, 3>(1, 1);
    d = std::max(d, (a.transpose() * a - Mat3::Identity()).cwiseAbs().maxCoeff());
    d = std::max(d, std::abs(a.determinant() - 1.0));
    return d;
  }
  const Mat4 j = j_matrix(kappa);
  double d = (g.transpose() * j * g - j).cwiseAbs().maxCoeff();
  d = std::max(d, std::abs(g.determinant() - 1.0));
  if (kappa == -1 && g(0, 0) <= 0.0) d = std::max(d, 1.0);  // wrong component
  return d;
}

IsometryG operator*(const IsometryG& a, const IsometryG& b) {
  if (a.kappa != b.kappa) {
    throw KappaMismatch("isometry product: kappa mismatch");
  }
  return {a.kappa, a.g * b.g};
}

Mat4 exp_p(int kappa, const Vec3& x) {
  const Mat4 z = z_matrix(kappa, x, Vec3::Zero());
  if (kappa == 0) return Mat4::Identity() + z;  // nilpotent: pure translation
  const double t = x.norm();
  if (kappa == 1) {
    return Mat4::Identity() + series::sinc(t) * z + series::versine(t) * (z * z);
  }
  return Mat4::Identity() + series::sinhc(t) * z + series::coshm1(t) * (z * z);
}

Mat4 exp_k(const Vec3& xi) {
  Mat4 m = Mat4::Identity();
  m.block<3, 3>(1, 1) = rotation_exp(xi);
  return m;
}

Mat4 Frame::as_group() const {
  Mat4 m;
  m.col(0) = p;
  m.block<4, 3>(0, 1) = b;
  return m;
}

double Frame::orthogonality_defect() const {
  const Mat4 j = j_matrix(kappa == 0 ? 0 : kappa);
  const Mat3 gram = b.transpose() * j * b;
  double d = (gram - Mat3::Identity()).cwiseAbs().maxCoeff();
  if (kappa == 0) {
    d = std::max(d, b.row(0).cwiseAbs().maxCoeff());
  } else {
    // columns must be tangent at p
    d = std::max(d, (b.transpose() * j * p).cwiseAbs().maxCoeff());
  }
  return d;
}

Frame frame_of(const IsometryG& g) {
  return {g.kappa, g.g.col(0), g.g.rightCols<3>()};
}

IsometryG group_of_frame(const Frame& f) { return {f.kappa, f.as_group()}; }

std::pair<LieElementZ, IsometryG> cartan_decompose(const IsometryG& g, double tol) {
  const Vec4 p = g.g.col(0);
  Vec3 x = Vec3::Zero();
  if (g.kappa == 0) {
    x = p.tail<3>();
  } else {
    const Vec3 spatial = p.tail<3>();
    const double s = spatial.norm();
    if (g.kappa == 1) {
      if ((p + base_origin()).norm() < tol) {
        throw AntipodalPoint("cartan_decompose: g(o) is antipodal to the origin");
      }
      if (s > 0.0) x = std::atan2(s, p(0)) * (spatial / s);
    } else {
      if (s > 0.0) x = std::asinh(s) * (spatial / s);
    }
  }
  const IsometryG k{g.kappa, exp_p(g.kappa, -x) * g.g};
  return {LieElementZ{g.kappa, x, Vec3::Zero()}, k};
}

Mat4 p_morphism(const UnitQuaternion& p, const UnitQuaternion& q) {
  const Quaternion qc = q.quat().conj();
  Mat4 m;
  m.col(0) = (p.quat() * qc).as_vec4();
  m.col(1) = (p.quat() * Quaternion::pure(Vec3::UnitX()) * qc).as_vec4();
  m.col(2) = (p.quat() * Quaternion::pure(Vec3::UnitY()) * qc).as_vec4();
  m.col(3) = (p.quat() * Quaternion::pure(Vec3::UnitZ()) * qc).as_vec4();
  return m;
}

}  // namespace screwcal
