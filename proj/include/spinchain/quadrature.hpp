#pragma once

#include <functional>
#include <vector>

namespace spinchain {

/// Adaptive Gauss-Kronrod (G7, K15) integration with bisection on the
/// embedded error estimate.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10, double rel_tol = 1e-9, int max_depth = 40);

/// Same, but the interval is first split at the given interior points (for
/// piecewise-smooth integrands whose kink locations are known).
double integrate_with_breakpoints(const std::function<double(double)>& f, double a, double b,
                                  std::vector<double> breakpoints, double abs_tol = 1e-10,
                                  double rel_tol = 1e-9, int max_depth = 40);

}  // namespace spinchain
