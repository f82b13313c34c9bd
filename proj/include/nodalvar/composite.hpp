#ifndef NODALVAR_COMPOSITE_HPP
#define NODALVAR_COMPOSITE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nodalvar/region_solver.hpp"
#include "nodalvar/scaling.hpp"

namespace nodalvar {

/// Ordered interior node positions splitting the domain into m regions.
struct NodalPartition {
  Problem1D problem;
  std::vector<double> interior_nodes;

  int region_count() const {
    return static_cast<int>(interior_nodes.size()) + 1;
  }
  Interval region(int j) const;
};

/// Validates ordering, domain membership and the 50h separation floor.
NodalPartition make_partition(const Problem1D& problem,
                              std::span<const double> interior_nodes);

/// C1-patched, sign-alternating, unit-normalized trial state.
struct CompositeWavefunction {
  NodalPartition partition;
  std::vector<RegionSolution> region_solutions;  // stored positive
  std::vector<double> region_scales;             // signed, global norm applied
  std::vector<double> weights;                   // p_j, sums to 1
  std::vector<double> region_energies;
  std::vector<double> samples;                   // full problem grid

  int region_count() const { return partition.region_count(); }
};

/// Scales contiguous region solutions so first derivatives match at the
/// shared nodes (region 1 keeps +1 before global normalization), then
/// renormalizes globally and records weights. Throws DegeneratePatch on a
/// vanishing one-sided node derivative.
CompositeWavefunction patch_regions(std::vector<RegionSolution> solutions);

/// Region solves for every region of the partition, then patch_regions.
CompositeWavefunction solve_composite(const Problem1D& problem,
                                      std::span<const double> interior_nodes);

/// Wraps externally supplied full-grid samples that vanish at the given
/// nodes (a node-preserving trial) into a composite: per-region energies are
/// quadrature Rayleigh quotients, weights come from the sampled norm.
CompositeWavefunction trial_composite_from_samples(
    const Problem1D& problem, std::span<const double> interior_nodes,
    std::span<const double> samples);

/// Weighted average energy over a subset of regions (0-based indices).
double average_energy(const CompositeWavefunction& c, std::span<const int> subset);

struct EnergyReference {
  enum class Mode { SubsetAverage, FullAverage, Explicit };
  Mode mode = Mode::SubsetAverage;
  double value = 0.0;

  static EnergyReference subset_average() { return {Mode::SubsetAverage, 0.0}; }
  static EnergyReference full_average() { return {Mode::FullAverage, 0.0}; }
  static EnergyReference explicit_energy(double e) { return {Mode::Explicit, e}; }
};

/// Weighted variance-style error expression over the subset, renormalized by
/// the subset weight sum.
double error_expression_1(const CompositeWavefunction& c,
                          std::span<const int> subset, EnergyReference ref);

/// (exact_energy - subset average)^2
double squared_deviation(const CompositeWavefunction& c,
                         std::span<const int> subset, double exact_energy);

/// Scaled-trial energy-shift expression: mean over the scaling family of
/// [ (sum_S E_j I_j(g)) / (sum_S I_j(g)) - full average ]^2 with
/// I_j(g) = integral of g * psi^2 over region j. Scaling functions whose
/// subset support fraction falls below 1e-10 are dropped (the family mean
/// runs over the retained ones).
double error_expression_2(const CompositeWavefunction& c,
                          std::span<const ScalingFunction> scaling_set,
                          std::span<const int> subset);

struct LocalEnergyPoint {
  double x = 0.0;
  double kinetic = 0.0;
  double potential = 0.0;
  double total = 0.0;
};

/// Pointwise -psi''/(2 psi) + V on grid points farther than 5h from every
/// node and domain end; closer points are masked (omitted).
std::vector<LocalEnergyPoint> local_energy_profile(const CompositeWavefunction& c);

/// Right-limit minus left-limit of the total local energy at interior node
/// `node_index`, from linear extrapolation of the masked profile.
double kinetic_jump_at_node(const CompositeWavefunction& c, int node_index);

struct SignReport {
  std::vector<int> region_signs;
  bool alternates = false;
  bool odd_parity = true;  // only meaningful for HarmonicHalfLine
  bool ok = false;
};

/// Re-derives region signs from the samples and checks alternation; for the
/// half-line oscillator also verifies the odd reflection through x = 0.
SignReport sign_alternation_check(const CompositeWavefunction& c);

/// Report row for one subset, plus the per-region breakdown.
struct ErrorReport {
  std::vector<int> subset;  // 0-based
  double average_energy = 0.0;
  double reference_energy = 0.0;
  double err1 = 0.0;
  std::optional<double> err2;
  struct PerRegion {
    int index = 0;
    double a = 0.0, b = 0.0;
    double energy = 0.0, weight = 0.0;
    double squared_deviation = 0.0;
  };
  std::vector<PerRegion> per_region;
};

ErrorReport make_error_report(const CompositeWavefunction& c,
                              std::span<const int> subset, EnergyReference ref,
                              const std::vector<ScalingFunction>* scaling_set);

/// All non-empty region subsets in size-then-lexicographic order
/// (the row order of the benchmark tables).
std::vector<std::vector<int>> all_subsets(int region_count);

}  // namespace nodalvar

#endif
