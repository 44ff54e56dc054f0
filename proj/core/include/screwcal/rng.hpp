#pragma once

#include <cmath>
#include <cstdint>

#include "screwcal/algebra.hpp"

namespace screwcal {

/// Deterministic, platform-independent random stream (splitmix64). The
/// standard <random> distributions are implementation defined, which would
/// break byte-identical reports across toolchains, so the few distributions
/// needed here are spelled out.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  /// Independent stream for sample index i of a seeded experiment; lets
  /// sampling loops run in parallel with order-independent results.
  static Rng indexed(std::uint64_t seed, std::uint64_t index) {
    Rng r(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    r.next();
    return r;
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  double normal() {
    // Box-Muller; one value per call keeps the stream position predictable.
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  Vec3 vec3(double a, double b) { return Vec3(uniform(a, b), uniform(a, b), uniform(a, b)); }

  Vec3 unit_vec3() {
    Vec3 v;
    do {
      v = Vec3(normal(), normal(), normal());
    } while (v.norm() < 1e-12);
    return v.normalized();
  }

  Vec4 unit_vec4() {
    Vec4 v;
    do {
      v = Vec4(normal(), normal(), normal(), normal());
    } while (v.norm() < 1e-12);
    return v.normalized();
  }

  UnitQuaternion unit_quaternion() { return UnitQuaternion(Quaternion::from_vec4(unit_vec4())); }

 private:
  std::uint64_t state_;
};

}  // namespace screwcal
