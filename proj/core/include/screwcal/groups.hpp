#pragma once

#include <utility>

#include "screwcal/algebra.hpp"

namespace screwcal {

/// Element (x, q) of R^3 ⋊ S^3 with product (x,p)(y,q) = (x + p y p̄, p q).
struct SpinMotion {
  Vec3 x = Vec3::Zero();
  UnitQuaternion q;

  static SpinMotion identity() { return {}; }
  SpinMotion inverse() const {
    const UnitQuaternion qc = q.conj();
    return {-qc.rotate(x), qc};
  }
};

SpinMotion operator*(const SpinMotion& g, const SpinMotion& h);
inline SpinMotion spin_mul(const SpinMotion& g, const SpinMotion& h) { return g * h; }

/// Element (x, A) of R^3 ⋊ SO_3 with product (x,A)(y,B) = (x + Ay, AB).
struct EuclideanMotion {
  Vec3 x = Vec3::Zero();
  Mat3 A = Mat3::Identity();

  static EuclideanMotion identity() { return {}; }
  EuclideanMotion inverse() const { return {-(A.transpose() * x), A.transpose()}; }
};

EuclideanMotion operator*(const EuclideanMotion& g, const EuclideanMotion& h);
inline EuclideanMotion euclid_mul(const EuclideanMotion& g, const EuclideanMotion& h) {
  return g * h;
}

/// Two-to-one morphism (x, q) -> (x, I_q) onto the Euclidean motions.
EuclideanMotion covering_pi(const SpinMotion& g);

/// Ambient tangent vector at a SpinMotion: velocity of the translation part
/// plus a (generally non-imaginary) quaternion velocity.
struct SpinTangent {
  Vec3 x = Vec3::Zero();
  Quaternion q = Quaternion::real(0.0);
};

/// dL_g at the identity applied to (xi, eta): (p xi p̄, p eta).
SpinTangent left_diff_spin(const SpinMotion& g, const Vec3& xi, const Vec3& eta);

/// Inverse of left_diff_spin: dL_{g^{-1}} pulling an ambient tangent at g back
/// to identity components (xi, eta). The quaternion part must be tangent to
/// S^3 at g.q (real part of q̄ v.q vanishes).
std::pair<Vec3, Vec3> pull_spin_to_identity(const SpinMotion& g, const SpinTangent& v);

/// Group exponential of R^3 ⋊ S^3 at (xi, eta); one-parameter subgroups
/// t -> exp_spin(t xi, t eta). The translation part integrates the rotating
/// frame, giving the familiar screw-motion V-matrix with angular rate 2 eta.
SpinMotion exp_spin(const Vec3& xi, const Vec3& eta);

/// Lie algebra element Z_kappa(x, xi) of iso(M_kappa):
///   [ 0    -kappa x^T ]
///   [ x     C_xi      ]
struct LieElementZ {
  int kappa = 0;
  Vec3 x = Vec3::Zero();
  Vec3 xi = Vec3::Zero();

  Mat4 matrix() const;
};

inline Mat4 z_matrix(int kappa, const Vec3& x, const Vec3& xi) {
  return LieElementZ{kappa, x, xi}.matrix();
}

/// Recovers (x, xi) from a Z-patterned matrix; NotLieElement if the pattern
/// is violated beyond tol.
LieElementZ z_unpack(int kappa, const Mat4& m, double tol = 1e-10);

/// Nearest Z-element of a 4x4 matrix without validation; used on
/// finite-difference data where the pattern holds only approximately.
LieElementZ z_project(int kappa, const Mat4& m);

/// Closed-form bracket [Z(x,xi), Z(y,eta)] = Z(xi x y - eta x x, kappa x x y + xi x eta).
LieElementZ bracket_z(const LieElementZ& a, const LieElementZ& b);

/// diag(kappa, 1, 1, 1); the ambient bilinear form for kappa = ±1 and the
/// tangent-space metric for all kappa (tangents at kappa = 0 have v0 = 0).
Mat4 j_matrix(int kappa);

inline Vec4 base_origin() { return Vec4(1, 0, 0, 0); }

/// Embeds a point of M_kappa into R^4 (kappa = 0: the affine chart x0 = 1).
Vec4 embed_point(int kappa, const Vec3& p);

/// Direct isometry of M_kappa as a 4x4 matrix acting on the model in R^4.
/// For kappa = 0 the matrix is affine: first row (1,0,0,0), first column
/// (1, a), rotation block A.
struct IsometryG {
  int kappa = 0;
  Mat4 g = Mat4::Identity();

  static IsometryG identity(int kappa) { return {kappa, Mat4::Identity()}; }
  static IsometryG from_euclid(const EuclideanMotion& e);
  EuclideanMotion to_euclid() const;  // kappa must be 0

  IsometryG inverse() const;
  Vec4 apply(const Vec4& v) const { return g * v; }

  /// Pattern / metric-preservation defect (0 for exact group elements).
  double invariant_defect() const;
};

IsometryG operator*(const IsometryG& a, const IsometryG& b);

/// exp(Z_kappa(x, 0)): transvection along the geodesic from the origin in
/// direction x; closed form per curvature sign.
Mat4 exp_p(int kappa, const Vec3& x);

/// exp(Z_kappa(0, xi)) = blockdiag(1, exp(C_xi)); isotropy rotation at the origin.
Mat4 exp_k(const Vec3& xi);

/// Positively oriented orthonormal frame b: T_oM -> T_pM, stored as the
/// basepoint (a 4-vector) and the 4x3 matrix of images of e1, e2, e3.
struct Frame {
  int kappa = 0;
  Vec4 p = base_origin();
  Mat43 b = Mat43::Identity();

  /// The isometry [p | b] whose differential at the origin is this frame.
  Mat4 as_group() const;
  double orthogonality_defect() const;
};

/// The identification g -> (dg)_o between the isometry group and the frame
/// bundle: basepoint g(o), frame columns g e1, g e2, g e3.
Frame frame_of(const IsometryG& g);
IsometryG group_of_frame(const Frame& f);

/// Cartan decomposition g = exp(Z(x,0)) k with k fixing the origin. For
/// kappa = 1 throws AntipodalPoint when g(o) = -e0 within tol (the
/// decomposition is not unique there).
std::pair<LieElementZ, IsometryG> cartan_decompose(const IsometryG& g, double tol = 1e-9);

/// The morphism S^3 x S^3 -> SO_4, (p, q) -> (z -> p z q̄) on R^4 ≅ H.
Mat4 p_morphism(const UnitQuaternion& p, const UnitQuaternion& q);

namespace series {
double sinhc(double t);        // sinh(t)/t
double coshm1(double t);       // (cosh t - 1)/t^2
}  // namespace series

}  // namespace screwcal
