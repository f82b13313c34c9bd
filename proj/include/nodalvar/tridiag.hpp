#ifndef NODALVAR_TRIDIAG_HPP
#define NODALVAR_TRIDIAG_HPP

#include <vector>

namespace nodalvar {

/// Tridiagonal operator with independent super/sub diagonals. Only the first
/// and last couplings ever differ here (off-grid boundary stencils); the
/// matrix is always diagonally symmetrizable: upper[i]*lower[i] > 0.
struct Tridiag {
  std::vector<double> diag;
  std::vector<double> upper;  // A[i][i+1], size n-1
  std::vector<double> lower;  // A[i+1][i], size n-1

  int size() const { return static_cast<int>(diag.size()); }
  /// y = A x
  std::vector<double> apply(const std::vector<double>& x) const;
};

/// Sturm-sequence count of eigenvalues strictly below sigma.
int eigenvalues_below(const Tridiag& T, double sigma);

struct SmallestEig {
  double value = 0.0;
  std::vector<double> vector;  // right eigenvector, unnormalized sign/scale
  int bisection_steps = 0;
  int inverse_steps = 0;
};

/// Smallest eigenvalue by Sturm bisection to `tol` absolute, eigenvector by
/// shifted inverse iteration on the symmetrized matrix. Throws NumericFailure
/// with iteration diagnostics if either stage fails to converge.
SmallestEig smallest_eigenpair(const Tridiag& T, double tol = 1e-10);

}  // namespace nodalvar

#endif
