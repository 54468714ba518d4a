#include "spinchain/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace spinchain {

namespace {

// Kronrod 15-point nodes/weights on [-1, 1] with the embedded Gauss 7 rule.
constexpr double kNodes[8] = {
    0.000000000000000000000000000000000, 0.207784955007898467600689403773245,
    0.405845151377397166906606412076961, 0.586087235467691130294144838258730,
    0.741531185599394439863864773280788, 0.864864423359769072789712788640926,
    0.949107912342758524526189684047851, 0.991455371120812639206854697526329};
constexpr double kWeightsK[8] = {
    0.209482141084727828012999174891714, 0.204432940075298892414161999234649,
    0.190350578064785409913256402421014, 0.169004726639267902826583426598550,
    0.140653259715525918745189590510238, 0.104790010322250183839876322541518,
    0.063092092629978553290700663189204, 0.022935322010529224963732008058970};
constexpr double kWeightsG[4] = {
    0.417959183673469387755102040816327, 0.381830050505118944950369775488975,
    0.279705391489276667901467771423780, 0.129484966168869693270611432679082};

struct GkResult {
  double value;
  double error;
};

GkResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double f0 = f(c);
  double kron = kWeightsK[0] * f0;
  double gauss = kWeightsG[0] * f0;
  for (int i = 1; i < 8; ++i) {
    double x = h * kNodes[i];
    double fsum = f(c - x) + f(c + x);
    kron += kWeightsK[i] * fsum;
    if (i % 2 == 0) gauss += kWeightsG[i / 2] * fsum;
  }
  kron *= h;
  gauss *= h;
  double err = std::pow(200.0 * std::abs(kron - gauss), 1.5);
  return {kron, std::min(err, std::abs(kron - gauss) * 200.0)};
}

double adapt(const std::function<double(double)>& f, double a, double b, double abs_tol,
             double rel_tol, int depth) {
  GkResult r = gk15(f, a, b);
  if (depth <= 0 || r.error <= abs_tol || r.error <= rel_tol * std::abs(r.value)) return r.value;
  double c = 0.5 * (a + b);
  return adapt(f, a, c, 0.5 * abs_tol, rel_tol, depth - 1) +
         adapt(f, c, b, 0.5 * abs_tol, rel_tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                 double rel_tol, int max_depth) {
  if (a == b) return 0.0;
  return adapt(f, a, b, abs_tol, rel_tol, max_depth);
}

double integrate_with_breakpoints(const std::function<double(double)>& f, double a, double b,
                                  std::vector<double> breakpoints, double abs_tol,
                                  double rel_tol, int max_depth) {
  std::vector<double> pts{a};
  std::sort(breakpoints.begin(), breakpoints.end());
  for (double p : breakpoints)
    if (p > a && p < b && p - pts.back() > 1e-14) pts.push_back(p);
  pts.push_back(b);
  double total = 0.0;
  double piece_tol = abs_tol / static_cast<double>(pts.size() - 1);
  for (size_t i = 1; i < pts.size(); ++i)
    total += integrate(f, pts[i - 1], pts[i], piece_tol, rel_tol, max_depth);
  return total;
}

}  // namespace spinchain
