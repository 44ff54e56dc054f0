#include "screwcal/metrics.hpp"

#include <cmath>

#include "screwcal/rng.hpp"

namespace screwcal {

double inner_g(const LieElementZ& a, const LieElementZ& b) {
  if (a.kappa != b.kappa) throw KappaMismatch("inner_g: kappa mismatch");
  return 0.25 * (a.x.dot(b.xi) + b.x.dot(a.xi));
}

double inner_spin(const TangentPair& a, const TangentPair& b) {
  return 0.5 * (a.x.dot(b.xi) + b.x.dot(a.xi));
}

double inner_s3xs3(const TangentPair& a, const TangentPair& b) {
  return 0.5 * (a.x.dot(b.x) - a.xi.dot(b.xi));
}

CausalType causal_type(double norm2, double tol) {
  if (norm2 > tol) return CausalType::Spacelike;
  if (norm2 < -tol) return CausalType::Timelike;
  return CausalType::Null;
}

LieElementZ pull_g_to_identity(const IsometryG& g, const Mat4& velocity, bool strict,
                               double tol) {
  const Mat4 z = g.inverse().g * velocity;
  return strict ? z_unpack(g.kappa, z, tol) : z_project(g.kappa, z);
}

Mat4 push_g_from_identity(const IsometryG& g, const LieElementZ& z) {
  if (g.kappa != z.kappa) throw KappaMismatch("push_g_from_identity: kappa mismatch");
  return g.g * z.matrix();
}

TangentPair pull_s3xs3_to_identity(const UnitQuaternion& p, const UnitQuaternion& q,
                                   const Quaternion& pdot, const Quaternion& qdot) {
  const Quaternion a = p.quat().conj() * pdot;
  const Quaternion b = q.quat().conj() * qdot;
  return {a.v, b.v};
}

std::pair<Vec3, Mat3> covering_pi_diff(const SpinMotion& g, const SpinTangent& v) {
  // d/dt (q z q̄) = qdot z q̄ + q z qdot̄ on imaginary z.
  const Quaternion qc = g.q.quat().conj();
  const Quaternion qdc = v.q.conj();
  Mat3 m;
  for (int i = 0; i < 3; ++i) {
    const Quaternion zi = Quaternion::pure(Vec3::Unit(i));
    m.col(i) = (v.q * zi * qc + g.q.quat() * zi * qdc).v;
  }
  return {v.x, m};
}

Mat4 p_morphism_diff(const UnitQuaternion& p, const UnitQuaternion& q, const Vec3& v,
                     const Vec3& w) {
  // d/dt (p e^{tv} z e^{-tw} q̄) = p (v z - z w) q̄.
  const Quaternion qc = q.quat().conj();
  const Quaternion pv = Quaternion::pure(v);
  const Quaternion pw = Quaternion::pure(w);
  Mat4 m;
  const Quaternion basis[4] = {Quaternion::real(1.0), Quaternion::pure(Vec3::UnitX()),
                               Quaternion::pure(Vec3::UnitY()), Quaternion::pure(Vec3::UnitZ())};
  for (int i = 0; i < 4; ++i) {
    m.col(i) = (p.quat() * (pv * basis[i] - basis[i] * pw) * qc).as_vec4();
  }
  return m;
}

double check_ad_skew(int kappa, int n_samples, std::uint64_t seed) {
  double worst = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    Rng rng = Rng::indexed(seed, static_cast<std::uint64_t>(i));
    const LieElementZ z{kappa, rng.vec3(-1, 1), rng.vec3(-1, 1)};
    const LieElementZ w{kappa, rng.vec3(-1, 1), rng.vec3(-1, 1)};
    const LieElementZ v{kappa, rng.vec3(-1, 1), rng.vec3(-1, 1)};
    const double defect = std::abs(inner_g(bracket_z(z, w), v) + inner_g(w, bracket_z(z, v)));
    worst = std::max(worst, defect);
  }
  return worst;
}

}  // namespace screwcal
