#ifndef NODALVAR_PROBLEM_HPP
#define NODALVAR_PROBLEM_HPP

#include <string>

namespace nodalvar {

enum class ProblemKind {
  HydrogenRadial,    // u(r) = r R(r), V(r) = -1/r, Hartree units
  HarmonicHalfLine,  // V(x) = x^2/2 on x > 0, unitless
};

/// One benchmark system: uniform grid on [x_min, x_max] with Dirichlet ends.
/// Immutable value type; cheap to copy (no sample storage).
struct Problem1D {
  ProblemKind kind = ProblemKind::HydrogenRadial;
  double x_min = 0.0;
  double x_max = 0.0;
  int n_points = 0;

  double spacing() const { return (x_max - x_min) / (n_points - 1); }
  double x(int i) const { return x_min + i * spacing(); }
  double potential(double x) const;

  bool same_grid(const Problem1D& other) const {
    return kind == other.kind && x_min == other.x_min &&
           x_max == other.x_max && n_points == other.n_points;
  }
};

/// Builds a problem on [0, x_max] with n_points grid points.
/// Throws InvalidConfiguration for non-positive x_max or n_points < 1000.
Problem1D make_problem(ProblemKind kind, double x_max, int n_points);

/// Same problem on a 2^level-refined grid (shared grid points preserved).
Problem1D refine_problem(const Problem1D& problem, int level);

ProblemKind problem_kind_from_string(const std::string& name);
std::string to_string(ProblemKind kind);

}  // namespace nodalvar

#endif
