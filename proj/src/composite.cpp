#include "nodalvar/composite.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "nodalvar/errors.hpp"
#include "nodalvar/quadrature.hpp"

namespace nodalvar {

Interval NodalPartition::region(int j) const {
  const int m = region_count();
  double a = (j == 0) ? problem.x_min : interior_nodes[j - 1];
  double b = (j == m - 1) ? problem.x_max : interior_nodes[j];
  return {a, b};
}

NodalPartition make_partition(const Problem1D& problem,
                              std::span<const double> interior_nodes) {
  const double h = problem.spacing();
  const double floor = 50.0 * h;
  double prev = problem.x_min;
  for (double n : interior_nodes) {
    if (!(n > problem.x_min) || !(n < problem.x_max))
      fail(ErrorCode::InvalidPartition,
           "node " + std::to_string(n) + " outside the open domain");
    if (!(n > prev))
      fail(ErrorCode::InvalidPartition, "nodes must be strictly increasing");
    if (n - prev < floor)
      fail(ErrorCode::InvalidPartition,
           "regions need at least 50 grid spacings; separation " +
               std::to_string(n - prev) + " < " + std::to_string(floor));
    prev = n;
  }
  if (!interior_nodes.empty() && problem.x_max - prev < floor)
    fail(ErrorCode::InvalidPartition,
         "outer region narrower than the 50-spacing floor");
  return NodalPartition{problem,
                        {interior_nodes.begin(), interior_nodes.end()}};
}

namespace {

void validate_subset(const CompositeWavefunction& c,
                     std::span<const int> subset) {
  if (subset.empty())
    fail(ErrorCode::InvalidSubset, "subset of regions must be non-empty");
  std::set<int> seen;
  for (int j : subset) {
    if (j < 0 || j >= c.region_count())
      fail(ErrorCode::InvalidSubset,
           "region index " + std::to_string(j) + " out of range");
    if (!seen.insert(j).second)
      fail(ErrorCode::InvalidSubset,
           "region index " + std::to_string(j) + " repeated");
  }
}

std::vector<double> assemble_samples(const Problem1D& problem,
                                     const std::vector<RegionSolution>& sols,
                                     const std::vector<double>& scales) {
  std::vector<double> full(problem.n_points, 0.0);
  for (std::size_t j = 0; j < sols.size(); ++j)
    for (std::size_t i = 0; i < sols[j].samples.size(); ++i)
      full[sols[j].first_index + i] = scales[j] * sols[j].samples[i];
  return full;
}

// integral of f * psi^2 over region j, using the region's own slice
double region_weighted_integral(const CompositeWavefunction& c, int j,
                                const ScalingFunction& g) {
  const RegionSolution& sol = c.region_solutions[j];
  const double h = c.partition.problem.spacing();
  const double scale2 = c.region_scales[j] * c.region_scales[j];
  std::vector<double> f(sol.samples.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double x = c.partition.problem.x(sol.first_index + i);
    f[i] = g(x) * sol.samples[i] * sol.samples[i] * scale2;
  }
  return integrate_over(f, h, sol.slice, 0.0, 0.0);
}

}  // namespace

CompositeWavefunction patch_regions(std::vector<RegionSolution> solutions) {
  if (solutions.empty())
    fail(ErrorCode::InvalidPartition, "patch_regions: no region solutions");
  const Problem1D& problem = solutions.front().problem;
  std::vector<double> nodes;
  for (std::size_t j = 0; j + 1 < solutions.size(); ++j) {
    const double b = solutions[j].interval.b;
    const double a = solutions[j + 1].interval.a;
    if (std::abs(b - a) > 1e-9 * problem.x_max)
      fail(ErrorCode::InvalidPartition,
           "region solutions are not contiguous at " + std::to_string(b));
    nodes.push_back(b);
  }

  const int m = static_cast<int>(solutions.size());
  std::vector<double> scales(m, 1.0);
  for (int j = 1; j < m; ++j) {
    const double left = solutions[j - 1].slope_b;   // negative for + lobes
    const double right = solutions[j].slope_a;       // positive
    if (std::abs(left) < 1e-10 || std::abs(right) < 1e-10)
      fail(ErrorCode::DegeneratePatch,
           "vanishing one-sided derivative at node " + std::to_string(nodes[j - 1]));
    scales[j] = scales[j - 1] * left / right;  // forces the sign flip
  }

  double total = 0.0;
  for (int j = 0; j < m; ++j)
    total += scales[j] * scales[j] * solutions[j].norm_squared;
  const double inv = 1.0 / std::sqrt(total);
  for (double& s : scales) s *= inv;

  CompositeWavefunction c;
  c.partition = NodalPartition{problem, nodes};
  c.region_scales = scales;
  c.weights.resize(m);
  c.region_energies.resize(m);
  for (int j = 0; j < m; ++j) {
    c.weights[j] = scales[j] * scales[j] * solutions[j].norm_squared;
    c.region_energies[j] = solutions[j].energy;
  }
  c.samples = assemble_samples(problem, solutions, scales);
  c.region_solutions = std::move(solutions);
  return c;
}

CompositeWavefunction solve_composite(const Problem1D& problem,
                                      std::span<const double> interior_nodes) {
  NodalPartition partition = make_partition(problem, interior_nodes);
  std::vector<RegionSolution> sols;
  sols.reserve(partition.region_count());
  for (int j = 0; j < partition.region_count(); ++j)
    sols.push_back(region_ground_state(problem, partition.region(j)));
  return patch_regions(std::move(sols));
}

CompositeWavefunction trial_composite_from_samples(
    const Problem1D& problem, std::span<const double> interior_nodes,
    std::span<const double> samples) {
  if (static_cast<int>(samples.size()) != problem.n_points)
    fail(ErrorCode::InvalidConfiguration,
         "trial samples must cover the full problem grid");
  NodalPartition partition = make_partition(problem, interior_nodes);
  const double h = problem.spacing();
  const int m = partition.region_count();

  std::vector<double> df = derivative_samples(samples, h);

  CompositeWavefunction c;
  c.partition = partition;
  c.samples.assign(samples.begin(), samples.end());
  c.region_scales.assign(m, 1.0);
  c.weights.resize(m);
  c.region_energies.resize(m);

  double norm2 = 0.0;
  std::vector<double> raw_weight(m), raw_energy(m);
  for (int j = 0; j < m; ++j) {
    Interval iv = partition.region(j);
    InteriorSlice s = interior_slice(problem, iv.a, iv.b);
    std::vector<double> f2(s.count()), fd2(s.count()), fV(s.count());
    for (int i = 0; i < s.count(); ++i) {
      const int k = s.first + i;
      const double x = problem.x(k);
      f2[i] = samples[k] * samples[k];
      fd2[i] = df[k] * df[k];
      fV[i] = f2[i] * problem.potential(x);
    }
    const double dl = interp_linear(problem, df, iv.a);
    const double dr = interp_linear(problem, df, iv.b);
    const double den = integrate_over(f2, h, s, 0.0, 0.0);
    const double kin = 0.5 * integrate_over(fd2, h, s, dl * dl, dr * dr);
    // the trial vanishes at nodes and domain ends, so f^2 V -> 0 there
    // (including hydrogen's r = 0, where f^2 ~ r^2 beats 1/r)
    const double pot = integrate_over(fV, h, s, 0.0, 0.0);
    raw_weight[j] = den;
    raw_energy[j] = (kin + pot) / den;
    norm2 += den;

    RegionSolution sol;
    sol.problem = problem;
    sol.interval = iv;
    sol.first_index = s.first;
    sol.slice = s;
    sol.energy = raw_energy[j];
    sol.samples.resize(s.count());
    for (int i = 0; i < s.count(); ++i) sol.samples[i] = samples[s.first + i];
    sol.norm_squared = den;
    sol.slope_a = interp_linear(problem, df, iv.a);
    sol.slope_b = interp_linear(problem, df, iv.b);
    c.region_solutions.push_back(std::move(sol));
  }
  for (int j = 0; j < m; ++j) {
    c.weights[j] = raw_weight[j] / norm2;
    c.region_energies[j] = raw_energy[j];
  }
  return c;
}

double average_energy(const CompositeWavefunction& c,
                      std::span<const int> subset) {
  validate_subset(c, subset);
  double num = 0.0, den = 0.0;
  for (int j : subset) {
    num += c.weights[j] * c.region_energies[j];
    den += c.weights[j];
  }
  return num / den;
}

namespace {
double resolve_reference(const CompositeWavefunction& c,
                         std::span<const int> subset, EnergyReference ref) {
  switch (ref.mode) {
    case EnergyReference::Mode::SubsetAverage:
      return average_energy(c, subset);
    case EnergyReference::Mode::FullAverage: {
      std::vector<int> all(c.region_count());
      for (int j = 0; j < c.region_count(); ++j) all[j] = j;
      return average_energy(c, all);
    }
    case EnergyReference::Mode::Explicit:
      return ref.value;
  }
  return 0.0;
}
}  // namespace

double error_expression_1(const CompositeWavefunction& c,
                          std::span<const int> subset, EnergyReference ref) {
  validate_subset(c, subset);
  const double e_ref = resolve_reference(c, subset, ref);
  double num = 0.0, den = 0.0;
  for (int j : subset) {
    const double d = c.region_energies[j] - e_ref;
    num += c.weights[j] * d * d;
    den += c.weights[j];
  }
  return num / den;
}

double squared_deviation(const CompositeWavefunction& c,
                         std::span<const int> subset, double exact_energy) {
  const double d = exact_energy - average_energy(c, subset);
  return d * d;
}

double error_expression_2(const CompositeWavefunction& c,
                          std::span<const ScalingFunction> scaling_set,
                          std::span<const int> subset) {
  validate_subset(c, subset);
  if (scaling_set.empty())
    fail(ErrorCode::DisallowedScaling, "error expression 2 needs scaling functions");
  for (const ScalingFunction& g : scaling_set)
    if (!g.strictly_positive(c.partition.problem))
      fail(ErrorCode::DisallowedScaling,
           "scaling function " + g.id() + " is not strictly positive");

  std::vector<int> all(c.region_count());
  for (int j = 0; j < c.region_count(); ++j) all[j] = j;
  const double e_full = average_energy(c, all);

  const double support_cutoff = 1e-10;
  double sum = 0.0;
  int kept = 0;
  for (const ScalingFunction& g : scaling_set) {
    std::vector<double> I(c.region_count());
    double full = 0.0;
    for (int j = 0; j < c.region_count(); ++j) {
      I[j] = region_weighted_integral(c, j, g);
      full += I[j];
    }
    double ds = 0.0, num = 0.0;
    for (int j : subset) {
      ds += I[j];
      num += c.region_energies[j] * I[j];
    }
    if (!(ds > support_cutoff * full)) continue;  // no support on the subset
    const double quotient = num / ds;
    const double bracket = quotient - e_full;
    sum += bracket * bracket;
    ++kept;
  }
  if (kept == 0)
    fail(ErrorCode::DegenerateScaling,
         "no scaling function has support on the requested subset");
  return sum / kept;
}

std::vector<LocalEnergyPoint> local_energy_profile(
    const CompositeWavefunction& c) {
  const Problem1D& problem = c.partition.problem;
  const double h = problem.spacing();
  const double mask = 5.0 * h;
  std::vector<LocalEnergyPoint> out;
  out.reserve(problem.n_points);
  for (int i = 1; i + 1 < problem.n_points; ++i) {
    const double x = problem.x(i);
    if (x - problem.x_min < mask || problem.x_max - x < mask) continue;
    bool masked = false;
    for (double n : c.partition.interior_nodes)
      if (std::abs(x - n) < mask) masked = true;
    if (masked || c.samples[i] == 0.0) continue;
    const double d2 = (c.samples[i + 1] - 2 * c.samples[i] + c.samples[i - 1]) / (h * h);
    LocalEnergyPoint p;
    p.x = x;
    p.kinetic = -0.5 * d2 / c.samples[i];
    p.potential = problem.potential(x);
    p.total = p.kinetic + p.potential;
    out.push_back(p);
  }
  return out;
}

double kinetic_jump_at_node(const CompositeWavefunction& c, int node_index) {
  if (node_index < 0 ||
      node_index >= static_cast<int>(c.partition.interior_nodes.size()))
    fail(ErrorCode::InvalidSubset, "node index out of range");
  const double node = c.partition.interior_nodes[node_index];
  std::vector<LocalEnergyPoint> profile = local_energy_profile(c);

  // least-squares line through the K nearest unmasked points on each side,
  // evaluated at the node
  auto extrapolate = [&](bool left) {
    const int K = 5;
    std::vector<const LocalEnergyPoint*> pts;
    if (left) {
      for (auto it = profile.rbegin(); it != profile.rend(); ++it)
        if (it->x < node) {
          pts.push_back(&*it);
          if (static_cast<int>(pts.size()) == K) break;
        }
    } else {
      for (const auto& p : profile)
        if (p.x > node) {
          pts.push_back(&p);
          if (static_cast<int>(pts.size()) == K) break;
        }
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int n = static_cast<int>(pts.size());
    for (const auto* p : pts) {
      sx += p->x;
      sy += p->total;
      sxx += p->x * p->x;
      sxy += p->x * p->total;
    }
    const double det = n * sxx - sx * sx;
    if (n < 2 || std::abs(det) < 1e-300) return n ? sy / n : 0.0;
    const double slope = (n * sxy - sx * sy) / det;
    const double icept = (sy - slope * sx) / n;
    return icept + slope * node;
  };
  return extrapolate(false) - extrapolate(true);
}

SignReport sign_alternation_check(const CompositeWavefunction& c) {
  SignReport rep;
  const int m = c.region_count();
  rep.region_signs.resize(m, 0);
  for (int j = 0; j < m; ++j) {
    const RegionSolution& sol = c.region_solutions[j];
    double peak = 0.0;
    int sign = 0;
    for (std::size_t i = 0; i < sol.samples.size(); ++i) {
      const double v = c.samples[sol.first_index + i];
      if (std::abs(v) > peak) {
        peak = std::abs(v);
        sign = (v > 0) - (v < 0);
      }
    }
    rep.region_signs[j] = sign;
  }
  rep.alternates = true;
  for (int j = 0; j + 1 < m; ++j)
    if (rep.region_signs[j] == 0 ||
        rep.region_signs[j] * rep.region_signs[j + 1] != -1)
      rep.alternates = false;

  if (c.partition.problem.kind == ProblemKind::HarmonicHalfLine) {
    // the full-line state is the odd reflection; it is a valid antisymmetric
    // extension exactly when the half-line samples vanish at x = 0
    rep.odd_parity = (c.samples.front() == 0.0);
  }
  rep.ok = rep.alternates && rep.odd_parity;
  return rep;
}

ErrorReport make_error_report(const CompositeWavefunction& c,
                              std::span<const int> subset, EnergyReference ref,
                              const std::vector<ScalingFunction>* scaling_set) {
  ErrorReport rep;
  rep.subset.assign(subset.begin(), subset.end());
  rep.average_energy = average_energy(c, subset);
  rep.reference_energy = resolve_reference(c, subset, ref);
  rep.err1 = error_expression_1(c, subset, ref);
  if (scaling_set && !scaling_set->empty())
    rep.err2 = error_expression_2(c, *scaling_set, subset);
  for (int j : subset) {
    Interval iv = c.partition.region(j);
    const double d = c.region_energies[j] - rep.reference_energy;
    rep.per_region.push_back(
        {j, iv.a, iv.b, c.region_energies[j], c.weights[j], d * d});
  }
  return rep;
}

std::vector<std::vector<int>> all_subsets(int region_count) {
  std::vector<std::vector<int>> out;
  for (int size = 1; size <= region_count; ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      out.push_back(idx);
      int i = size - 1;
      while (i >= 0 && idx[i] == region_count - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int k = i + 1; k < size; ++k) idx[k] = idx[k - 1] + 1;
    }
  }
  return out;
}

}  // namespace nodalvar
