#include "nodalvar/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "nodalvar/errors.hpp"

namespace nodalvar {

double evaluate_objective(const NodeObjective& objective,
                          std::span<const double> nodes) {
  CompositeWavefunction c = solve_composite(objective.problem, nodes);
  std::vector<int> all(c.region_count());
  for (int j = 0; j < c.region_count(); ++j) all[j] = j;
  if (objective.kind == ObjectiveKind::Err1)
    return error_expression_1(c, all, EnergyReference::subset_average());
  if (objective.scaling_set.empty())
    fail(ErrorCode::DisallowedScaling,
         "Err2 objective needs a non-empty scaling set");
  return error_expression_2(c, objective.scaling_set, all);
}

OptResult minimize_simplex(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> initial, const OptimizeOptions& options) {
  const int dim = static_cast<int>(initial.size());
  const double inf = std::numeric_limits<double>::infinity();
  auto score = [&](const std::vector<double>& p) { return f(p); };

  // initial simplex: the start plus one displaced vertex per dimension
  std::vector<std::vector<double>> vertex(dim + 1,
                                          {initial.begin(), initial.end()});
  for (int i = 0; i < dim; ++i) vertex[i + 1][i] += options.simplex_scale;
  std::vector<double> value(dim + 1);
  for (int i = 0; i <= dim; ++i) {
    value[i] = score(vertex[i]);
    if (i > 0 && value[i] == inf) {  // flip a vertex that crossed the barrier
      vertex[i][i - 1] -= 2.0 * options.simplex_scale;
      value[i] = score(vertex[i]);
    }
  }

  OptResult result;
  auto record = [&](int iter) {
    int best = static_cast<int>(
        std::min_element(value.begin(), value.end()) - value.begin());
    if (result.trace.empty() || value[best] < result.trace.back().value)
      result.trace.push_back({iter, vertex[best], value[best]});
  };
  record(0);

  const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
  int iter = 0;
  bool converged = false;
  while (iter < options.max_iterations) {
    ++iter;
    std::vector<int> order(dim + 1);
    for (int i = 0; i <= dim; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return value[a] < value[b]; });
    const int best = order[0], worst = order[dim], second = order[dim - 1];

    if (std::isfinite(value[worst]) &&
        value[worst] - value[best] < options.tolerance) {
      converged = true;
      break;
    }

    std::vector<double> centroid(dim, 0.0);
    for (int i = 0; i <= dim; ++i) {
      if (i == worst) continue;
      for (int k = 0; k < dim; ++k) centroid[k] += vertex[i][k];
    }
    for (double& v : centroid) v /= dim;

    auto blend = [&](double t) {
      std::vector<double> p(dim);
      for (int k = 0; k < dim; ++k)
        p[k] = centroid[k] + t * (vertex[worst][k] - centroid[k]);
      return p;
    };

    std::vector<double> reflected = blend(-alpha);
    double f_reflected = score(reflected);
    if (f_reflected < value[best]) {
      std::vector<double> expanded = blend(-gamma);
      double f_expanded = score(expanded);
      if (f_expanded < f_reflected) {
        vertex[worst] = std::move(expanded);
        value[worst] = f_expanded;
      } else {
        vertex[worst] = std::move(reflected);
        value[worst] = f_reflected;
      }
    } else if (f_reflected < value[second]) {
      vertex[worst] = std::move(reflected);
      value[worst] = f_reflected;
    } else {
      std::vector<double> contracted =
          blend(f_reflected < value[worst] ? -rho : rho);
      double f_contracted = score(contracted);
      if (f_contracted < std::min(value[worst], f_reflected)) {
        vertex[worst] = std::move(contracted);
        value[worst] = f_contracted;
      } else {
        for (int i = 0; i <= dim; ++i) {
          if (i == best) continue;
          for (int k = 0; k < dim; ++k)
            vertex[i][k] =
                vertex[best][k] + sigma * (vertex[i][k] - vertex[best][k]);
          value[i] = score(vertex[i]);
        }
      }
    }
    record(iter);
  }

  int best = static_cast<int>(
      std::min_element(value.begin(), value.end()) - value.begin());
  result.nodes = vertex[best];
  result.objective_value = value[best];
  result.iterations = iter;
  result.converged = converged;
  return result;
}

namespace {

bool admissible(const Problem1D& problem, std::span<const double> nodes) {
  const double floor = 50.0 * problem.spacing();
  double prev = problem.x_min;
  for (double n : nodes) {
    if (!(n - prev >= floor)) return false;
    prev = n;
  }
  return problem.x_max - prev >= floor;
}

}  // namespace

OptResult optimize_nodes(const NodeObjective& objective,
                         std::span<const double> initial,
                         const OptimizeOptions& options) {
  if (initial.empty())
    fail(ErrorCode::InvalidPartition, "optimize_nodes needs at least one node");
  if (!admissible(objective.problem, initial))
    fail(ErrorCode::InvalidPartition, "initial nodes are inadmissible");

  const double inf = std::numeric_limits<double>::infinity();
  auto barrier = [&](std::span<const double> nodes) {
    if (!admissible(objective.problem, nodes)) return inf;
    return evaluate_objective(objective, nodes);
  };
  return minimize_simplex(barrier, initial, options);
}

}  // namespace nodalvar
