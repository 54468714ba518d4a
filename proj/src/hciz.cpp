#include "spinchain/hciz.hpp"

#include <cmath>
#include <stdexcept>

#include "spinchain/quadrature.hpp"

namespace spinchain {
namespace hciz {

namespace {

constexpr double kCut = 6.0;  // Gaussian factor e^{-9 l^2 / 8} < 1e-17 beyond

inline double sgn(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

inline double density_unchecked(double l1, double l2, double l3, double l4) {
  double vd = (l2 - l1) * (l3 - l1) * (l4 - l1) * (l3 - l2) * (l4 - l2) * (l4 - l3);
  double signs = sgn(l1 - l2) * sgn(l3 - l4) + sgn(l1 - l3) * sgn(l4 - l2) +
                 sgn(l1 - l4) * sgn(l2 - l3);
  double gauss = std::exp(-9.0 / 8.0 * (l1 * l1 + l2 * l2 + l3 * l3 + l4 * l4));
  return density_constant() * gauss * vd * 8.0 * signs;
}

// sign-product kinks of the innermost integral over t with the other three
// eigenvalues (a, b) fixed and the fourth equal to -(a + b + t)
std::vector<double> inner_breakpoints(double a, double b) {
  return {a, b, -(a + b) / 2.0, -2.0 * a - b, -a - 2.0 * b};
}

}  // namespace

double density_constant() {
  // C * C5 = 3^9 pi^5 / (1536 (2 pi)^{11/2})
  static const double k =
      std::pow(3.0, 9) * std::pow(M_PI, 5) / (1536.0 * std::pow(2.0 * M_PI, 5.5));
  return k;
}

double joint_density_n2(const std::array<double, 4>& lambda) {
  double trace = lambda[0] + lambda[1] + lambda[2] + lambda[3];
  if (std::abs(trace) > 1e-12)
    throw std::invalid_argument("point is off the trace-zero hyperplane");
  return density_unchecked(lambda[0], lambda[1], lambda[2], lambda[3]);
}

double two_point_n2(double lambda, double pinned) {
  auto f = [&](double l3) {
    return density_unchecked(lambda, pinned, l3, -lambda - pinned - l3);
  };
  return integrate_with_breakpoints(f, -kCut, kCut, inner_breakpoints(lambda, pinned), 1e-10,
                                    1e-9);
}

std::vector<double> two_point_n2(const std::vector<double>& grid, double pinned) {
  std::vector<double> out(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) out[i] = two_point_n2(grid[i], pinned);
  return out;
}

double one_point_n2(double lambda) {
  auto outer = [&](double l2) { return two_point_n2(lambda, l2); };
  return integrate_with_breakpoints(outer, -kCut, kCut, {lambda, -lambda, 0.0, -lambda / 3.0},
                                    1e-6, 1e-6);
}

std::vector<double> one_point_n2(const std::vector<double>& grid) {
  std::vector<double> out(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) out[i] = one_point_n2(grid[i]);
  return out;
}

double hyperplane_normalization(double abs_tol) {
  // integrate over (l2, l3, l4) with l1 = -(l2 + l3 + l4)
  auto middle = [&](double l4) {
    auto inner2 = [&](double l3) {
      auto innermost = [&](double l2) {
        return density_unchecked(-(l2 + l3 + l4), l2, l3, l4);
      };
      return integrate_with_breakpoints(
          innermost, -kCut, kCut,
          {l3, l4, -(l3 + l4) / 2.0, -2.0 * l3 - l4, -l3 - 2.0 * l4}, 1e-10, 1e-9);
    };
    return integrate(inner2, -kCut, kCut, 1e-7, 1e-7, 24);
  };
  return integrate(middle, -kCut, kCut, abs_tol / 4.0, 1e-6, 20);
}

double two_point_normalization() {
  auto f = [&](double l) { return two_point_n2(l, 0.0); };
  return integrate_with_breakpoints(f, -kCut, kCut, {0.0}, 1e-6, 1e-6);
}

}  // namespace hciz
}  // namespace spinchain
