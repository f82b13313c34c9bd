#ifndef NODALVAR_QUADRATURE_HPP
#define NODALVAR_QUADRATURE_HPP

#include <span>
#include <vector>

#include "nodalvar/problem.hpp"

namespace nodalvar {

/// Trapezoidal rule on uniformly spaced samples.
double trapezoid(std::span<const double> f, double h);

/// Derivative samples: central differences inside, second-order one-sided at
/// the two ends.
std::vector<double> derivative_samples(std::span<const double> f, double h);

/// Grid points strictly inside (a, b), with the widths of the partial panels
/// between the interval ends and the nearest interior grid points.
/// An end falling within 1e-3*h of a grid point is snapped onto it
/// (gap becomes exactly h); this keeps boundary stencils bounded.
struct InteriorSlice {
  int first = 0;
  int last = -1;
  double gap_a = 0.0;  // x(first) - a
  double gap_b = 0.0;  // b - x(last)
  int count() const { return last - first + 1; }
};

InteriorSlice interior_slice(const Problem1D& problem, double a, double b);

/// Integral over (a, b): trapezoid across the interior panels plus the two
/// partial end panels with supplied end values fa = f(a), fb = f(b).
/// `f` must cover exactly [slice.first, slice.last].
double integrate_over(std::span<const double> f, double h,
                      const InteriorSlice& slice, double fa, double fb);

/// Derivative at the left end a of a function vanishing there, from the two
/// nearest samples u0 = u(a + gap), u1 = u(a + gap + h). Non-uniform
/// three-point formula, exact for quadratics.
double boundary_slope(double u0, double u1, double gap, double h);

/// Linear interpolation of uniformly gridded samples at x.
double interp_linear(const Problem1D& problem, std::span<const double> f,
                     double x);

}  // namespace nodalvar

#endif
