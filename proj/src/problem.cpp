#include "nodalvar/problem.hpp"

#include <cmath>

#include "nodalvar/errors.hpp"

namespace nodalvar {

double Problem1D::potential(double x) const {
  switch (kind) {
    case ProblemKind::HydrogenRadial:
      return -1.0 / x;
    case ProblemKind::HarmonicHalfLine:
      return 0.5 * x * x;
  }
  return 0.0;
}

Problem1D make_problem(ProblemKind kind, double x_max, int n_points) {
  if (!(x_max > 0.0) || !std::isfinite(x_max) || n_points < 2)
    fail(ErrorCode::InvalidConfiguration,
         "make_problem: x_max must be positive and n_points >= 2");
  if (n_points < 1000)
    fail(ErrorCode::InvalidConfiguration,
         "make_problem: n_points must be at least 1000 (got " +
             std::to_string(n_points) + ")");
  return Problem1D{kind, 0.0, x_max, n_points};
}

Problem1D refine_problem(const Problem1D& problem, int level) {
  int n = problem.n_points;
  for (int l = 0; l < level; ++l) n = 2 * (n - 1) + 1;
  Problem1D refined = problem;
  refined.n_points = n;
  return refined;
}

ProblemKind problem_kind_from_string(const std::string& name) {
  if (name == "hydrogen" || name == "hydrogen_radial" || name == "HydrogenRadial")
    return ProblemKind::HydrogenRadial;
  if (name == "oscillator" || name == "harmonic_half_line" ||
      name == "HarmonicHalfLine")
    return ProblemKind::HarmonicHalfLine;
  fail(ErrorCode::InvalidConfiguration,
       "unknown problem kind '" + name + "' (expected hydrogen | oscillator)");
}

std::string to_string(ProblemKind kind) {
  return kind == ProblemKind::HydrogenRadial ? "hydrogen" : "oscillator";
}

}  // namespace nodalvar
