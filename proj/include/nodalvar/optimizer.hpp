#ifndef NODALVAR_OPTIMIZER_HPP
#define NODALVAR_OPTIMIZER_HPP

#include <span>
#include <vector>

#include "nodalvar/composite.hpp"

namespace nodalvar {

enum class ObjectiveKind { Err1, Err2 };

/// Node-position objective: Err1 is the weighted variance of region energies
/// over the full set (subset-average reference); Err2 is the scaled-trial
/// expression with a fixed scaling family.
struct NodeObjective {
  ObjectiveKind kind = ObjectiveKind::Err1;
  Problem1D problem;
  std::vector<ScalingFunction> scaling_set;  // required for Err2
};

/// Builds the partition, solves all regions, patches and evaluates the
/// selected expression. Throws InvalidPartition for inadmissible nodes.
double evaluate_objective(const NodeObjective& objective,
                          std::span<const double> nodes);

struct OptimizeOptions {
  int max_iterations = 500;
  double simplex_scale = 0.1;   // initial vertex displacement, length units
  double tolerance = 1e-12;     // convergence on the simplex value spread
};

struct TracePoint {
  int iteration = 0;
  std::vector<double> nodes;
  double value = 0.0;
};

struct OptResult {
  std::vector<double> nodes;
  double objective_value = 0.0;
  int iterations = 0;
  std::vector<TracePoint> trace;
  bool converged = false;
};

/// Derivative-free downhill-simplex search over node positions with an
/// ordering/separation barrier (inadmissible vertices score +infinity).
/// Exceeding max_iterations returns converged = false with the best point.
OptResult optimize_nodes(const NodeObjective& objective,
                         std::span<const double> initial,
                         const OptimizeOptions& options = {});

/// The deterministic simplex core behind optimize_nodes; also drives the
/// benchmark node reconstruction. `f` may return +infinity as a barrier.
OptResult minimize_simplex(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> initial, const OptimizeOptions& options);

}  // namespace nodalvar

#endif
