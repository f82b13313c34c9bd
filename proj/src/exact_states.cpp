#include "nodalvar/exact_states.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "nodalvar/errors.hpp"
#include "nodalvar/quadrature.hpp"

namespace nodalvar {

namespace {

// u_{40}(r) ~ r e^{-r/4} L(r/2), L(x) = 4 - 6x + 2x^2 - x^3/6
double hydrogen_4s(double r) {
  const double x = 0.5 * r;
  const double lag = 4.0 + x * (-6.0 + x * (2.0 - x / 6.0));
  return r * std::exp(-0.25 * r) * lag;
}

// psi_5(x) ~ H5(x) e^{-x^2/2}, H5(x) = 32x^5 - 160x^3 + 120x
double oscillator_n5(double x) {
  const double h5 = x * (120.0 + x * x * (-160.0 + 32.0 * x * x));
  return h5 * std::exp(-0.5 * x * x);
}

double bisect_root(const std::function<double(double)>& f, double lo,
                   double hi) {
  double flo = f(lo);
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (hi - lo < 1e-14 * std::max(1.0, std::abs(mid))) return mid;
    double fm = f(mid);
    if ((flo < 0) == (fm < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> hydrogen_4s_nodes() {
  // roots of x^3 - 12x^2 + 36x - 24, nodes at r = 2x
  auto cubic = [](double x) { return ((x - 12.0) * x + 36.0) * x - 24.0; };
  return {2.0 * bisect_root(cubic, 0.5, 2.0), 2.0 * bisect_root(cubic, 2.0, 5.0),
          2.0 * bisect_root(cubic, 5.0, 10.0)};
}

std::vector<double> oscillator_n5_nodes() {
  const double s = std::sqrt(10240.0);
  return {std::sqrt((160.0 - s) / 64.0), std::sqrt((160.0 + s) / 64.0)};
}

}  // namespace

ExactState exact_state(const Problem1D& problem, const std::string& label) {
  ExactState state;
  state.problem = problem;
  state.label = label;

  std::function<double(double)> wave;
  if (label == "H 4S") {
    if (problem.kind != ProblemKind::HydrogenRadial)
      fail(ErrorCode::UnsupportedState, "state 'H 4S' needs a hydrogen problem");
    state.energy = -0.03125;
    state.interior_nodes = hydrogen_4s_nodes();
    wave = hydrogen_4s;
  } else if (label == "HO n=5") {
    if (problem.kind != ProblemKind::HarmonicHalfLine)
      fail(ErrorCode::UnsupportedState,
           "state 'HO n=5' needs an oscillator problem");
    state.energy = 5.5;
    state.interior_nodes = oscillator_n5_nodes();
    wave = oscillator_n5;
  } else {
    fail(ErrorCode::UnsupportedState, "unsupported state label '" + label +
                                          "' (supported: H 4S, HO n=5)");
  }

  const int n = problem.n_points;
  state.samples.resize(n);
  for (int i = 0; i < n; ++i) state.samples[i] = wave(problem.x(i));
  std::vector<double> sq(n);
  for (int i = 0; i < n; ++i) sq[i] = state.samples[i] * state.samples[i];
  const double norm = std::sqrt(trapezoid(sq, problem.spacing()));
  for (double& v : state.samples) v /= norm;
  return state;
}

std::vector<double> find_nodes(const Problem1D& problem,
                               std::span<const double> samples) {
  const int n = static_cast<int>(samples.size());
  double amax = 0.0;
  for (double v : samples) amax = std::max(amax, std::abs(v));
  if (amax == 0.0)
    fail(ErrorCode::DegenerateFunction, "find_nodes: all samples are zero");
  const double zero_tol = 1e-12 * amax;

  std::vector<double> nodes;
  int prev = -1;  // index of the previous sample with definite sign
  for (int i = 0; i < n; ++i) {
    if (std::abs(samples[i]) <= zero_tol) continue;
    if (prev >= 0 && (samples[i] > 0) != (samples[prev] > 0)) {
      // bisection on the linear interpolant between the bracketing samples
      double xa = problem.x(prev), xb = problem.x(i);
      double fa = samples[prev], fb = samples[i];
      const double x0 = xa, x1 = xb, f0 = fa, f1 = fb;
      auto lin = [&](double x) { return f0 + (f1 - f0) * (x - x0) / (x1 - x0); };
      while (xb - xa > 1e-10 * std::max(std::abs(xb), 1e-30)) {
        double mid = 0.5 * (xa + xb);
        if (mid == xa || mid == xb) break;
        double fm = lin(mid);
        if ((fa < 0) == (fm < 0)) {
          xa = mid;
          fa = fm;
        } else {
          xb = mid;
          fb = fm;
        }
      }
      double node = 0.5 * (xa + xb);
      if (node > problem.x_min && node < problem.x_max) nodes.push_back(node);
    }
    prev = i;
  }
  return nodes;
}

}  // namespace nodalvar
