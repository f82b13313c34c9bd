#ifndef NODALVAR_CONFIG_HPP
#define NODALVAR_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include "nodalvar/optimizer.hpp"
#include "nodalvar/problem.hpp"
#include "nodalvar/scaling.hpp"

namespace nodalvar {

/// Parsed run configuration (INI-shaped key=value sections). Every field is
/// validated against module preconditions before any compute starts; unknown
/// sections or keys are errors.
struct RunConfig {
  ProblemKind kind = ProblemKind::HydrogenRadial;
  double x_max = 120.0;
  int n_points = 24001;

  std::vector<double> nodes;

  std::optional<std::vector<int>> subset;  // 1-based region indices

  ObjectiveKind objective = ObjectiveKind::Err1;
  std::vector<ScalingFunction> scaling_set;
  OptimizeOptions optimize;
  int jacobi_levels = 3;
  double jacobi_tolerance = 1e-6;

  std::string out_dir = ".";
  int precision = 6;

  /// Problem with the NODALVAR_GRID_SCALE multiplier applied to n_points.
  Problem1D build_problem() const;
};

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

/// Current grid-scale multiplier from the environment (1.0 when unset).
double grid_scale_from_env();

}  // namespace nodalvar

#endif
