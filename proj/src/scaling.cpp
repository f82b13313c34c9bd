#include "nodalvar/scaling.hpp"

#include <cmath>
#include <cstdio>

#include "nodalvar/errors.hpp"

namespace nodalvar {

namespace {
std::string fmt(const char* pattern, double a, double b) {
  char buf[96];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}
}  // namespace

ScalingFunction ScalingFunction::gaussian(double d, double x0) {
  if (!(d > 0))
    fail(ErrorCode::DisallowedScaling, "gaussian scaling needs d > 0");
  return ScalingFunction(Kind::Gaussian, {d, x0},
                         fmt("gauss(d=%.6g,x0=%.6g)", d, x0));
}

ScalingFunction ScalingFunction::polynomial(std::vector<double> coeffs) {
  if (coeffs.empty())
    fail(ErrorCode::DisallowedScaling, "polynomial scaling needs coefficients");
  std::string id = "poly(";
  char buf[32];
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::snprintf(buf, sizeof buf, i ? ",%.6g" : "%.6g", coeffs[i]);
    id += buf;
  }
  id += ")";
  return ScalingFunction(Kind::Polynomial, std::move(coeffs), std::move(id));
}

ScalingFunction ScalingFunction::constant(double c) {
  return ScalingFunction(Kind::Constant, {c}, fmt("const(%.6g)", c, 0.0));
}

double ScalingFunction::operator()(double x) const {
  switch (kind_) {
    case Kind::Gaussian: {
      const double dx = x - params_[1];
      return std::exp(-2.0 * params_[0] * dx * dx);
    }
    case Kind::Polynomial: {
      double v = 0.0;
      for (std::size_t i = params_.size(); i-- > 0;) v = v * x + params_[i];
      return v;
    }
    case Kind::Constant:
      return params_[0];
  }
  return 0.0;
}

double ScalingFunction::derivative(double x) const {
  switch (kind_) {
    case Kind::Gaussian: {
      const double dx = x - params_[1];
      return -4.0 * params_[0] * dx * std::exp(-2.0 * params_[0] * dx * dx);
    }
    case Kind::Polynomial: {
      double v = 0.0;
      for (std::size_t i = params_.size(); i-- > 1;)
        v = v * x + params_[i] * static_cast<double>(i);
      return v;
    }
    case Kind::Constant:
      return 0.0;
  }
  return 0.0;
}

bool ScalingFunction::strictly_positive(const Problem1D& problem) const {
  if (kind_ == Kind::Gaussian) return true;  // positive by construction
  if (kind_ == Kind::Constant) return params_[0] > 0.0;
  for (int i = 0; i < problem.n_points; ++i)
    if (!((*this)(problem.x(i)) > 0.0)) return false;
  return true;
}

std::vector<ScalingFunction> bundled_scaling_set(ProblemKind kind) {
  if (kind == ProblemKind::HydrogenRadial)
    return {ScalingFunction::gaussian(12.3251, 0.9358),
            ScalingFunction::gaussian(1.9222, 4.2412),
            ScalingFunction::gaussian(0.3527, 11.0644),
            ScalingFunction::gaussian(0.0104, 47.7590)};
  return {ScalingFunction::gaussian(46.9440, 0.4795),
          ScalingFunction::gaussian(38.3518, 1.4895),
          ScalingFunction::gaussian(1.7408, 4.510)};
}

}  // namespace nodalvar
