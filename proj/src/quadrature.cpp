#include "nodalvar/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "nodalvar/errors.hpp"

namespace nodalvar {

double trapezoid(std::span<const double> f, double h) {
  if (f.size() < 2) return 0.0;
  double s = 0.5 * (f.front() + f.back());
  for (std::size_t i = 1; i + 1 < f.size(); ++i) s += f[i];
  return s * h;
}

std::vector<double> derivative_samples(std::span<const double> f, double h) {
  const std::size_t n = f.size();
  std::vector<double> d(n, 0.0);
  if (n < 3) return d;
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2 * h);
  d[0] = (-3 * f[0] + 4 * f[1] - f[2]) / (2 * h);
  d[n - 1] = (3 * f[n - 1] - 4 * f[n - 2] + f[n - 3]) / (2 * h);
  return d;
}

InteriorSlice interior_slice(const Problem1D& problem, double a, double b) {
  if (!(a < b) || a < problem.x_min - 1e-12 || b > problem.x_max + 1e-12)
    fail(ErrorCode::InvalidPartition,
         "interval endpoints must satisfy x_min <= a < b <= x_max");
  const double h = problem.spacing();
  const double snap = 1e-3;

  InteriorSlice s;
  double ta = (a - problem.x_min) / h;
  int ka = static_cast<int>(std::floor(ta + 1e-12));
  double fa = ta - ka;
  if (fa < snap) {
    s.first = ka + 1;
    s.gap_a = h;
  } else if (fa > 1.0 - snap) {
    s.first = ka + 2;
    s.gap_a = h;
  } else {
    s.first = ka + 1;
    s.gap_a = problem.x(s.first) - a;
  }

  double tb = (b - problem.x_min) / h;
  int kb = static_cast<int>(std::floor(tb + 1e-12));
  double fb = tb - kb;
  if (fb < snap) {
    s.last = kb - 1;
    s.gap_b = h;
  } else if (fb > 1.0 - snap) {
    s.last = kb;
    s.gap_b = h;
  } else {
    s.last = kb;
    s.gap_b = b - problem.x(s.last);
  }
  s.first = std::max(s.first, 1);
  s.last = std::min(s.last, problem.n_points - 2);
  return s;
}

double integrate_over(std::span<const double> f, double h,
                      const InteriorSlice& slice, double fa, double fb) {
  double s = trapezoid(f, h);
  s += slice.gap_a * 0.5 * (fa + f.front());
  s += slice.gap_b * 0.5 * (f.back() + fb);
  return s;
}

double boundary_slope(double u0, double u1, double gap, double h) {
  const double s1 = gap, s2 = gap + h;
  return (u0 * s2 * s2 - u1 * s1 * s1) / (s1 * s2 * h);
}

double interp_linear(const Problem1D& problem, std::span<const double> f,
                     double x) {
  const double h = problem.spacing();
  double t = (x - problem.x_min) / h;
  int k = static_cast<int>(std::floor(t));
  k = std::clamp(k, 0, problem.n_points - 2);
  double w = t - k;
  return (1.0 - w) * f[k] + w * f[k + 1];
}

}  // namespace nodalvar
