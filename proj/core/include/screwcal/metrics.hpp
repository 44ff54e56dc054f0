#pragma once

#include <cstdint>
#include <utility>

#include "screwcal/groups.hpp"

namespace screwcal {

/// Which of the three split inner products is meant.
enum class MetricKind {
  G0,     // 1/4 (<x,eta> + <y,xi>) on iso(M_kappa) in the Z parametrization
  Spin,   // 1/2 (<x,eta> + <y,xi>) on R^3 ⋊ S^3
  S3xS3,  // 1/2 (<x,x'> - <y,y'>) on S^3 x S^3
};

enum class CausalType { Spacelike, Null, Timelike };

/// Left-trivialized tangent vector (x, xi) at the identity; the single
/// representation used by every inner product here. Ambient tangents are
/// pulled back on ingestion.
struct TangentPair {
  Vec3 x = Vec3::Zero();
  Vec3 xi = Vec3::Zero();
};

inline TangentPair operator+(const TangentPair& a, const TangentPair& b) {
  return {a.x + b.x, a.xi + b.xi};
}
inline TangentPair operator-(const TangentPair& a, const TangentPair& b) {
  return {a.x - b.x, a.xi - b.xi};
}
inline TangentPair operator*(double s, const TangentPair& a) { return {s * a.x, s * a.xi}; }

/// <Z(x,xi), Z(y,eta)> = 1/4 (<x,eta> + <y,xi>); bi-invariant of signature (3,3).
double inner_g(const LieElementZ& a, const LieElementZ& b);

/// <(x,xi), (y,eta)> = 1/2 (<x,eta> + <y,xi>) at the identity of R^3 ⋊ S^3.
double inner_spin(const TangentPair& a, const TangentPair& b);

/// <(x,y), (x',y')> = 1/2 (<x,x'> - <y,y'>) at the identity of S^3 x S^3.
double inner_s3xs3(const TangentPair& a, const TangentPair& b);

/// Sign classification of a metric square with a null band of width tol.
CausalType causal_type(double norm2, double tol = 1e-10);

/// dL_{g^{-1}} for an ambient tangent to G_kappa at g (a 4x4 velocity matrix).
/// The result must land in the Lie algebra; `strict` validates the Z pattern,
/// otherwise the nearest Z element is taken (finite-difference inputs).
LieElementZ pull_g_to_identity(const IsometryG& g, const Mat4& velocity, bool strict = true,
                               double tol = 1e-10);

/// Push a Lie algebra element to an ambient velocity matrix at g.
Mat4 push_g_from_identity(const IsometryG& g, const LieElementZ& z);

/// dL_{(p,q)^{-1}} on S^3 x S^3 for quaternion velocities at (p, q).
TangentPair pull_s3xs3_to_identity(const UnitQuaternion& p, const UnitQuaternion& q,
                                   const Quaternion& pdot, const Quaternion& qdot);

/// Differential of the covering (x,q) -> (x, I_q) at the identity:
/// (xi, eta) -> (xi, C_{2 eta}).
inline LieElementZ covering_pi_diff_identity(const TangentPair& v) {
  return {0, v.x, 2.0 * v.xi};
}

/// Ambient differential of the covering at g: the velocity of t -> Pi(g(t)).
/// Returns the translation velocity and the 3x3 velocity of the rotation part.
std::pair<Vec3, Mat3> covering_pi_diff(const SpinMotion& g, const SpinTangent& v);

/// Ambient differential of the morphism P at (p, q) for velocities
/// (p vdot, q wdot); the velocity of t -> P(p e^{tv}, q e^{tw}) in SO_4.
Mat4 p_morphism_diff(const UnitQuaternion& p, const UnitQuaternion& q, const Vec3& v,
                     const Vec3& w);

/// Max over seeded samples of |<[Z,W],V> + <W,[Z,V]>|; the assertable form of
/// bi-invariance of the split metric.
double check_ad_skew(int kappa, int n_samples, std::uint64_t seed);

}  // namespace screwcal
