#ifndef NODALVAR_REGION_SOLVER_HPP
#define NODALVAR_REGION_SOLVER_HPP

#include <utility>
#include <vector>

#include "nodalvar/problem.hpp"
#include "nodalvar/quadrature.hpp"

namespace nodalvar {

/// One nodal region. Endpoints are real-valued; they need not sit on grid
/// points (b may be x_max, standing in for the unbounded outer region).
struct Interval {
  double a = 0.0;
  double b = 0.0;
};

/// Lowest Dirichlet eigenpair of -1/2 d^2/dx^2 + V on one region.
/// samples cover the grid points strictly inside (a, b); the function
/// vanishes at a and b themselves. Stored positive with unit discrete norm
/// over the region.
struct RegionSolution {
  Problem1D problem;
  Interval interval;
  double energy = 0.0;
  int first_index = 0;
  std::vector<double> samples;
  double norm_squared = 1.0;  // of the stored samples (kept for audit)
  double slope_a = 0.0;       // one-sided derivative at a (positive lobe: > 0)
  double slope_b = 0.0;       // one-sided derivative at b (< 0)
  InteriorSlice slice;

  int last_index() const {
    return first_index + static_cast<int>(samples.size()) - 1;
  }
};

/// Ground state of the region. Off-grid endpoints are handled by a
/// non-uniform three-point stencil in the boundary-adjacent rows; the
/// smallest eigenvalue comes from Sturm bisection (1e-10 absolute) plus
/// inverse iteration. Throws InsufficientResolution when the region holds
/// fewer than 50 grid points.
RegionSolution region_ground_state(const Problem1D& problem, Interval region);

/// Re-solves the region at spacings h, h/2, h/4, ... and returns (h, E).
/// refinement_levels must be at least 2.
std::vector<std::pair<double, double>> convergence_study(
    const Problem1D& problem, Interval region, int refinement_levels);

/// Plain discrete Rayleigh quotient of arbitrary samples against the
/// region operator (audit hook for the solver's energy).
double region_rayleigh_quotient(const Problem1D& problem, Interval region,
                                std::span<const double> samples);

}  // namespace nodalvar

#endif
