#pragma once

#include <stdexcept>
#include <string>

namespace screwcal {

/// Base class for all screwcal error conditions.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A matrix expected to be skew symmetric is not (beyond tolerance).
struct NotSkew : Error {
  using Error::Error;
};

/// Two Lie algebra elements with different curvature tags were combined.
struct KappaMismatch : Error {
  using Error::Error;
};

/// A 4x4 matrix does not have the Z(x,xi) block pattern of iso(M_kappa).
struct NotLieElement : Error {
  using Error::Error;
};

/// Cartan decomposition requested at an antipodal point (kappa = 1 only).
struct AntipodalPoint : Error {
  using Error::Error;
};

/// A blade or submanifold expected to be space-like fails the check.
struct NotSpacelike : Error {
  using Error::Error;
};

/// Finite-difference Richardson estimates disagree beyond tolerance.
struct StepTooLarge : Error {
  using Error::Error;
};

}  // namespace screwcal
