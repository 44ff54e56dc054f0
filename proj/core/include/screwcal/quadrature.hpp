#pragma once

#include <functional>
#include <vector>

namespace screwcal {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes and weights by Newton iteration on the Legendre recurrence;
/// accurate to machine precision for any practical n.
const GaussRule& gauss_legendre(int n);

/// Integrate fn over [a, b] with an n-point Gauss-Legendre rule.
double gauss_integrate(const std::function<double(double)>& fn, double a, double b, int n);

/// Adaptive Simpson with absolute tolerance; the independent oracle used
/// against tabulated quadratures.
double adaptive_simpson(const std::function<double(double)>& fn, double a, double b,
                        double tol = 1e-10, int max_depth = 40);

}  // namespace screwcal
