#include "nodalvar/jacobi.hpp"

#include <algorithm>
#include <cmath>

#include "nodalvar/errors.hpp"
#include "nodalvar/quadrature.hpp"

namespace nodalvar {

namespace {

std::vector<double> scaled_samples(const ExactState& state,
                                   const ScalingFunction& g) {
  const Problem1D& p = state.problem;
  std::vector<double> f(p.n_points);
  for (int i = 0; i < p.n_points; ++i) f[i] = g(p.x(i)) * state.samples[i];
  return f;
}

// potential-weighted square with the r = 0 limit handled for hydrogen
std::vector<double> potential_integrand(const Problem1D& p,
                                        const std::vector<double>& f) {
  std::vector<double> fv(p.n_points);
  for (int i = 1; i < p.n_points; ++i) fv[i] = f[i] * f[i] * p.potential(p.x(i));
  fv[0] = (p.kind == ProblemKind::HydrogenRadial)
              ? 0.0  // f ~ r near 0, so f^2 V -> 0
              : f[0] * f[0] * p.potential(p.x(0));
  return fv;
}

double quotient_of(const Problem1D& p, const std::vector<double>& f) {
  const double h = p.spacing();
  std::vector<double> df = derivative_samples(f, h);
  std::vector<double> integ(p.n_points);
  for (int i = 0; i < p.n_points; ++i) integ[i] = df[i] * df[i];
  const double kin = 0.5 * trapezoid(integ, h);
  const double pot = trapezoid(potential_integrand(p, f), h);
  for (int i = 0; i < p.n_points; ++i) integ[i] = f[i] * f[i];
  const double den = trapezoid(integ, h);
  if (den < 1e-14)
    fail(ErrorCode::DegenerateScaling,
         "scaled trial has negligible norm (denominator " +
             std::to_string(den) + ")");
  return (kin + pot) / den;
}

}  // namespace

double rayleigh_quotient_scaled(const ExactState& state,
                                const ScalingFunction& g) {
  return quotient_of(state.problem, scaled_samples(state, g));
}

double gradient_correction(const ExactState& state, const ScalingFunction& g) {
  const Problem1D& p = state.problem;
  const double h = p.spacing();
  std::vector<double> num_i(p.n_points), den_i(p.n_points);
  for (int i = 0; i < p.n_points; ++i) {
    const double x = p.x(i);
    const double a = g.derivative(x) * state.samples[i];
    const double b = g(x) * state.samples[i];
    num_i[i] = a * a;
    den_i[i] = b * b;
  }
  const double den = trapezoid(den_i, h);
  if (den < 1e-14)
    fail(ErrorCode::DegenerateScaling, "scaled trial has negligible norm");
  return 0.5 * trapezoid(num_i, h) / den;
}

double gradient_correction_with_hamiltonian(const ExactState& state,
                                            const ScalingFunction& g) {
  const Problem1D& p = state.problem;
  const double h = p.spacing();
  std::vector<double> f(p.n_points), den_i(p.n_points);
  for (int i = 0; i < p.n_points; ++i) {
    const double x = p.x(i);
    f[i] = g.derivative(x) * state.samples[i];
    const double b = g(x) * state.samples[i];
    den_i[i] = b * b;
  }
  std::vector<double> df = derivative_samples(f, h);
  std::vector<double> integ(p.n_points);
  for (int i = 0; i < p.n_points; ++i) integ[i] = df[i] * df[i];
  const double kin = 0.5 * trapezoid(integ, h);
  const double pot = trapezoid(potential_integrand(p, f), h);
  const double den = trapezoid(den_i, h);
  if (den < 1e-14)
    fail(ErrorCode::DegenerateScaling, "scaled trial has negligible norm");
  return 0.5 * (kin + pot) / den;
}

IdentityReport verify_multiplicative_identity(const ExactState& state,
                                              const ScalingFunction& g,
                                              int refinement_levels) {
  if (refinement_levels < 2)
    fail(ErrorCode::InvalidConfiguration,
         "identity verification needs at least 2 refinement levels");

  IdentityReport report;
  const ScalingFunction unit = ScalingFunction::constant(1.0);
  ExactState finest;
  for (int lev = 0; lev < refinement_levels; ++lev) {
    Problem1D p = refine_problem(state.problem, lev);
    ExactState s = exact_state(p, state.label);
    IdentityRow row;
    row.g_id = g.id();
    row.h = p.spacing();
    row.lhs = rayleigh_quotient_scaled(s, g);
    const double base = rayleigh_quotient_scaled(s, unit);
    const double corr = gradient_correction(s, g);
    row.rhs = base + corr;
    row.residual = std::abs(row.lhs - row.rhs);
    row.residual_vs_exact = std::abs(row.lhs - state.energy - corr);
    report.rows.push_back(row);
    if (lev == refinement_levels - 1) finest = std::move(s);
  }

  // second-order decrease, judged where the residual is above roundoff
  report.second_order = true;
  for (std::size_t i = 0; i + 1 < report.rows.size(); ++i) {
    const double r0 = report.rows[i].residual_vs_exact;
    const double r1 = report.rows[i + 1].residual_vs_exact;
    if (r0 < 1e-12 || r1 < 1e-13) continue;
    const double ratio = r0 / r1;
    if (ratio < 2.5 || ratio > 6.5) report.second_order = false;
  }

  // per-region version on the finest grid
  const Problem1D& p = finest.problem;
  const double h = p.spacing();
  std::vector<double> f = scaled_samples(finest, g);
  std::vector<double> df = derivative_samples(f, h);
  std::vector<double> fv = potential_integrand(p, f);
  std::vector<double> bounds;
  bounds.push_back(p.x_min);
  for (double n : finest.interior_nodes) bounds.push_back(n);
  bounds.push_back(p.x_max);
  for (std::size_t j = 0; j + 1 < bounds.size(); ++j) {
    InteriorSlice s = interior_slice(p, bounds[j], bounds[j + 1]);
    const int m = s.count();
    std::vector<double> fd2(m), f2(m), fV(m), corr_i(m), gpsi2(m);
    for (int i = 0; i < m; ++i) {
      const int k = s.first + i;
      const double x = p.x(k);
      fd2[i] = df[k] * df[k];
      f2[i] = f[k] * f[k];
      fV[i] = fv[k];
      const double a = g.derivative(x) * finest.samples[k];
      corr_i[i] = a * a;
      gpsi2[i] = f[k] * f[k];
    }
    const double dl = interp_linear(p, df, bounds[j]);
    const double dr = interp_linear(p, df, bounds[j + 1]);
    const double kin = 0.5 * integrate_over(fd2, h, s, dl * dl, dr * dr);
    const double pot = integrate_over(fV, h, s, 0.0, 0.0);
    const double den = integrate_over(f2, h, s, 0.0, 0.0);
    const double corr = 0.5 * integrate_over(corr_i, h, s, 0.0, 0.0) / den;
    RegionIdentityRow row;
    row.region = static_cast<int>(j);
    row.lhs = (kin + pot) / den;
    row.rhs = state.energy + corr;
    row.residual = std::abs(row.lhs - row.rhs);
    report.regions.push_back(row);
  }
  return report;
}

RatioCheckReport node_slope_and_ratio_check(const CompositeWavefunction& trial,
                                            const ExactState& exact) {
  const Problem1D& p = exact.problem;
  if (!trial.partition.problem.same_grid(p))
    fail(ErrorCode::InvalidConfiguration,
         "trial and exact state must share one problem grid");
  const double h = p.spacing();
  const auto& nodes = trial.partition.interior_nodes;
  for (std::size_t j = 0; j < nodes.size(); ++j)
    if (j >= exact.interior_nodes.size() ||
        std::abs(nodes[j] - exact.interior_nodes[j]) > 10 * h)
      fail(ErrorCode::InvalidConfiguration,
           "trial must be built on the exact nodes");

  RatioCheckReport rep;
  std::vector<double> dtrial = derivative_samples(trial.samples, h);
  std::vector<double> dexact = derivative_samples(exact.samples, h);
  for (double v : dtrial) rep.max_abs_slope = std::max(rep.max_abs_slope, std::abs(v));

  // global sign alignment
  double corr = 0.0;
  for (int i = 0; i < p.n_points; ++i) corr += trial.samples[i] * exact.samples[i];
  const double sign = corr >= 0 ? 1.0 : -1.0;

  rep.min_slope_fraction = 1.0;
  std::vector<double> node_fill(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const double st = interp_linear(p, dtrial, nodes[j]);
    const double se = interp_linear(p, dexact, nodes[j]);
    rep.node_slopes.push_back(st);
    rep.min_slope_fraction =
        std::min(rep.min_slope_fraction, std::abs(st) / rep.max_abs_slope);
    node_fill[j] = st / (sign * se);
  }
  if (rep.min_slope_fraction < 1e-3)
    fail(ErrorCode::DegenerateNode,
         "trial slope at a node below 1e-3 of the peak derivative");

  double amax = 0.0;
  for (double v : exact.samples) amax = std::max(amax, std::abs(v));
  const double floor = 1e-3 * amax;
  const double mask = 15.0 * h;

  rep.ratio_min = 1e300;
  rep.ratio_max = -1e300;
  std::vector<double> ratio(p.n_points,
                            std::numeric_limits<double>::quiet_NaN());
  for (int i = 0; i < p.n_points; ++i) {
    const double x = p.x(i);
    if (x - p.x_min < mask || p.x_max - x < mask) continue;
    bool near_node = false;
    for (double n : nodes)
      if (std::abs(x - n) < mask) near_node = true;
    if (near_node || std::abs(exact.samples[i]) < floor) continue;
    const double r = trial.samples[i] / (sign * exact.samples[i]);
    ratio[i] = r;
    rep.ratio_min = std::min(rep.ratio_min, r);
    rep.ratio_max = std::max(rep.ratio_max, r);
  }

  rep.max_node_discontinuity = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    double left = std::numeric_limits<double>::quiet_NaN();
    double right = std::numeric_limits<double>::quiet_NaN();
    for (int i = static_cast<int>((nodes[j] - p.x_min) / h); i >= 0; --i)
      if (!std::isnan(ratio[i])) {
        left = ratio[i];
        break;
      }
    for (int i = static_cast<int>((nodes[j] - p.x_min) / h) + 1;
         i < p.n_points; ++i)
      if (!std::isnan(ratio[i])) {
        right = ratio[i];
        break;
      }
    const double fill = node_fill[j];
    for (double side : {left, right})
      if (!std::isnan(side))
        rep.max_node_discontinuity =
            std::max(rep.max_node_discontinuity,
                     std::abs(side - fill) / std::abs(fill));
  }
  rep.ok = std::isfinite(rep.ratio_max) && std::isfinite(rep.ratio_min) &&
           rep.max_node_discontinuity <= 1e-2;
  return rep;
}

}  // namespace nodalvar
