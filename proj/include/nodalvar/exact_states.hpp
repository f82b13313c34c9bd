#ifndef NODALVAR_EXACT_STATES_HPP
#define NODALVAR_EXACT_STATES_HPP

#include <span>
#include <string>
#include <vector>

#include "nodalvar/problem.hpp"

namespace nodalvar {

/// Analytic benchmark eigenstate sampled on a problem grid.
/// samples carry unit discrete norm; the first lobe is positive.
struct ExactState {
  Problem1D problem;
  std::string label;
  double energy = 0.0;
  std::vector<double> interior_nodes;
  std::vector<double> samples;
};

/// Supported labels: "H 4S" (hydrogen radial) and "HO n=5" (half-line
/// oscillator). Throws UnsupportedState otherwise, or when the label does
/// not match the problem kind.
ExactState exact_state(const Problem1D& problem, const std::string& label);

/// Interior sign-change locations of sampled data, refined by bisection on
/// the piecewise-linear interpolant to relative tolerance 1e-10. Domain
/// endpoints are excluded. Throws DegenerateFunction on all-zero input.
std::vector<double> find_nodes(const Problem1D& problem,
                               std::span<const double> samples);

}  // namespace nodalvar

#endif
