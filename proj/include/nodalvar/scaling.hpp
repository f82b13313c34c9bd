#ifndef NODALVAR_SCALING_HPP
#define NODALVAR_SCALING_HPP

#include <string>
#include <vector>

#include "nodalvar/problem.hpp"

namespace nodalvar {

/// Smooth multiplicative scaling function g with an analytic derivative.
/// Gaussians are exp(-2 d (x - x0)^2).
class ScalingFunction {
public:
  static ScalingFunction gaussian(double d, double x0);
  static ScalingFunction polynomial(std::vector<double> ascending_coefficients);
  static ScalingFunction constant(double c);

  double operator()(double x) const;
  double derivative(double x) const;

  /// Node-preserving admissibility for error expression 2: g > 0 on the grid.
  bool strictly_positive(const Problem1D& problem) const;

  const std::string& id() const { return id_; }

private:
  enum class Kind { Gaussian, Polynomial, Constant };
  ScalingFunction(Kind kind, std::vector<double> params, std::string id)
      : kind_(kind), params_(std::move(params)), id_(std::move(id)) {}

  Kind kind_;
  std::vector<double> params_;  // gaussian: {d, x0}; poly: coeffs; const: {c}
  std::string id_;
};

/// The bundled Gaussian families used by the benchmark tables (one per nodal
/// region of the corresponding exact state).
std::vector<ScalingFunction> bundled_scaling_set(ProblemKind kind);

}  // namespace nodalvar

#endif
