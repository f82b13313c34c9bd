#include "nodalvar/region_solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nodalvar/errors.hpp"
#include "nodalvar/tridiag.hpp"

namespace nodalvar {

namespace {

Tridiag region_operator(const Problem1D& problem, const InteriorSlice& s) {
  const double h = problem.spacing();
  const int m = s.count();
  Tridiag T;
  T.diag.resize(m);
  T.upper.assign(m - 1, -1.0 / (2 * h * h));
  T.lower.assign(m - 1, -1.0 / (2 * h * h));
  for (int i = 0; i < m; ++i)
    T.diag[i] = 1.0 / (h * h) + problem.potential(problem.x(s.first + i));
  // boundary-adjacent rows: non-uniform second-difference stencil
  T.diag[0] = 1.0 / (s.gap_a * h) + problem.potential(problem.x(s.first));
  T.upper[0] = -1.0 / (h * (s.gap_a + h));
  T.diag[m - 1] = 1.0 / (s.gap_b * h) + problem.potential(problem.x(s.last));
  T.lower[m - 2] = -1.0 / (h * (s.gap_b + h));
  return T;
}

}  // namespace

RegionSolution region_ground_state(const Problem1D& problem, Interval region) {
  InteriorSlice s = interior_slice(problem, region.a, region.b);
  if (s.count() < 50)
    fail(ErrorCode::InsufficientResolution,
         "region (" + std::to_string(region.a) + ", " +
             std::to_string(region.b) + ") holds only " +
             std::to_string(s.count()) + " grid points (need 50)");

  const double h = problem.spacing();
  Tridiag T = region_operator(problem, s);
  SmallestEig eig = smallest_eigenpair(T, 1e-10);

  RegionSolution sol;
  sol.problem = problem;
  sol.interval = region;
  sol.first_index = s.first;
  sol.slice = s;
  sol.samples = std::move(eig.vector);

  double sum = 0.0;
  for (double v : sol.samples) sum += v;
  if (sum < 0)
    for (double& v : sol.samples) v = -v;

  std::vector<double> sq(sol.samples.size());
  for (std::size_t i = 0; i < sq.size(); ++i)
    sq[i] = sol.samples[i] * sol.samples[i];
  const double nrm2 = integrate_over(sq, h, s, 0.0, 0.0);
  const double scale = 1.0 / std::sqrt(nrm2);
  for (double& v : sol.samples) v *= scale;

  for (std::size_t i = 0; i < sq.size(); ++i)
    sq[i] = sol.samples[i] * sol.samples[i];
  sol.norm_squared = integrate_over(sq, h, s, 0.0, 0.0);

  // energy as the plain Rayleigh quotient of the returned samples
  std::vector<double> Au = T.apply(sol.samples);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < sol.samples.size(); ++i) {
    num += sol.samples[i] * Au[i];
    den += sol.samples[i] * sol.samples[i];
  }
  sol.energy = num / den;

  sol.slope_a = boundary_slope(sol.samples.front(), sol.samples[1], s.gap_a, h);
  sol.slope_b = -boundary_slope(sol.samples.back(),
                                sol.samples[sol.samples.size() - 2], s.gap_b, h);
  return sol;
}

std::vector<std::pair<double, double>> convergence_study(
    const Problem1D& problem, Interval region, int refinement_levels) {
  if (refinement_levels < 2)
    fail(ErrorCode::InvalidConfiguration,
         "convergence_study needs at least 2 refinement levels");
  std::vector<std::pair<double, double>> out;
  for (int lev = 0; lev < refinement_levels; ++lev) {
    Problem1D p = refine_problem(problem, lev);
    RegionSolution sol = region_ground_state(p, region);
    out.emplace_back(p.spacing(), sol.energy);
  }
  return out;
}

double region_rayleigh_quotient(const Problem1D& problem, Interval region,
                                std::span<const double> samples) {
  InteriorSlice s = interior_slice(problem, region.a, region.b);
  if (static_cast<int>(samples.size()) != s.count())
    fail(ErrorCode::InvalidConfiguration,
         "region_rayleigh_quotient: sample count does not match the region");
  Tridiag T = region_operator(problem, s);
  std::vector<double> v(samples.begin(), samples.end());
  std::vector<double> Av = T.apply(v);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    num += v[i] * Av[i];
    den += v[i] * v[i];
  }
  return num / den;
}

}  // namespace nodalvar
