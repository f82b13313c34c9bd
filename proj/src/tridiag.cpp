#include "nodalvar/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nodalvar/errors.hpp"

namespace nodalvar {

std::vector<double> Tridiag::apply(const std::vector<double>& x) const {
  const int n = size();
  std::vector<double> y(n);
  for (int i = 0; i < n; ++i) {
    double v = diag[i] * x[i];
    if (i > 0) v += lower[i - 1] * x[i - 1];
    if (i + 1 < n) v += upper[i] * x[i + 1];
    y[i] = v;
  }
  return y;
}

namespace {

std::vector<double> offdiag_squares(const Tridiag& T) {
  const int n = T.size();
  std::vector<double> e2(n - 1);
  for (int i = 0; i < n - 1; ++i) e2[i] = T.upper[i] * T.lower[i];
  return e2;
}

int sturm_count(const std::vector<double>& d, const std::vector<double>& e2,
                double sigma) {
  const int n = static_cast<int>(d.size());
  int count = 0;
  double q = d[0] - sigma;
  if (q < 0) ++count;
  for (int i = 1; i < n; ++i) {
    if (q == 0.0) q = -1e-300;
    q = d[i] - sigma - e2[i - 1] / q;
    if (q < 0) ++count;
  }
  return count;
}

// Tridiagonal LU with partial pivoting (one fill-in superdiagonal) and the
// matching solve, for the shifted symmetric matrix of inverse iteration.
struct ShiftedSolver {
  std::vector<double> dl, d, du, du2;
  std::vector<char> piv;
  int n = 0;

  ShiftedSolver(const std::vector<double>& diag, const std::vector<double>& e,
                double sigma) {
    n = static_cast<int>(diag.size());
    d.resize(n);
    for (int i = 0; i < n; ++i) d[i] = diag[i] - sigma;
    dl.assign(e.begin(), e.end());
    du.assign(e.begin(), e.end());
    du.push_back(0.0);
    du2.assign(n, 0.0);
    piv.assign(n, 0);
    for (int i = 0; i + 1 < n; ++i) {
      if (std::abs(d[i]) >= std::abs(dl[i])) {
        if (d[i] == 0.0) d[i] = 1e-300;
        double m = dl[i] / d[i];
        dl[i] = m;
        d[i + 1] -= m * du[i];
      } else {
        double m = d[i] / dl[i];
        d[i] = dl[i];
        double t = du[i];
        du[i] = d[i + 1];
        d[i + 1] = t - m * d[i + 1];
        if (i + 2 < n) {
          du2[i] = du[i + 1];
          du[i + 1] = -m * du[i + 1];
        }
        dl[i] = m;
        piv[i] = 1;
      }
    }
    if (d[n - 1] == 0.0) d[n - 1] = 1e-300;
  }

  void solve(std::vector<double>& b) const {
    for (int i = 0; i + 1 < n; ++i) {
      if (piv[i]) std::swap(b[i], b[i + 1]);
      b[i + 1] -= dl[i] * b[i];
    }
    b[n - 1] /= d[n - 1];
    if (n >= 2) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    for (int i = n - 3; i >= 0; --i)
      b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
  }
};

}  // namespace

int eigenvalues_below(const Tridiag& T, double sigma) {
  return sturm_count(T.diag, offdiag_squares(T), sigma);
}

SmallestEig smallest_eigenpair(const Tridiag& T, double tol) {
  const int n = T.size();
  if (n < 3)
    fail(ErrorCode::InsufficientResolution, "tridiagonal system too small");
  const std::vector<double> e2 = offdiag_squares(T);
  std::vector<double> e(n - 1);
  for (int i = 0; i < n - 1; ++i) {
    if (!(e2[i] > 0.0))
      fail(ErrorCode::NumericFailure,
           "operator not diagonally symmetrizable at row " + std::to_string(i));
    e[i] = -std::sqrt(e2[i]);
  }

  // Gerschgorin bracket for the symmetrized matrix
  double lo = T.diag[0], hi = T.diag[0];
  for (int i = 0; i < n; ++i) {
    double r = (i > 0 ? std::abs(e[i - 1]) : 0.0) +
               (i + 1 < n ? std::abs(e[i]) : 0.0);
    lo = std::min(lo, T.diag[i] - r);
    hi = std::max(hi, T.diag[i] + r);
  }

  SmallestEig out;
  const int max_bisect = 250;
  while (hi - lo > tol) {
    if (++out.bisection_steps > max_bisect)
      fail(ErrorCode::NumericFailure,
           "Sturm bisection stalled after " + std::to_string(max_bisect) +
               " steps, bracket width " + std::to_string(hi - lo));
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (sturm_count(T.diag, e2, mid) >= 1)
      hi = mid;
    else
      lo = mid;
  }
  const double sigma = 0.5 * (lo + hi);

  ShiftedSolver lu(T.diag, e, sigma);
  std::vector<double> w(n, 1.0 / std::sqrt(static_cast<double>(n)));
  const int max_inverse = 60;
  for (int it = 1;; ++it) {
    std::vector<double> y = w;
    lu.solve(y);
    double nrm = 0.0;
    for (double v : y) nrm += v * v;
    nrm = std::sqrt(nrm);
    for (double& v : y) v /= nrm;
    double dot = 0.0;
    for (int i = 0; i < n; ++i) dot += y[i] * w[i];
    w = std::move(y);
    out.inverse_steps = it;
    if (std::abs(std::abs(dot) - 1.0) < 1e-14) break;
    if (it >= max_inverse)
      fail(ErrorCode::NumericFailure,
           "inverse iteration failed to converge after " +
               std::to_string(max_inverse) + " steps at shift " +
               std::to_string(sigma));
  }

  // Rayleigh quotient on the symmetric form (second-order accurate)
  double num = 0.0, den = 0.0;
  for (int i = 0; i < n; ++i) {
    double v = T.diag[i] * w[i];
    if (i > 0) v += e[i - 1] * w[i - 1];
    if (i + 1 < n) v += e[i] * w[i + 1];
    num += w[i] * v;
    den += w[i] * w[i];
  }
  out.value = num / den;

  // Map back to the right eigenvector of the unsymmetrized operator:
  // u_i = w_i / delta_i with delta_{i+1}/delta_i = sqrt(upper_i/lower_i).
  out.vector.resize(n);
  double delta = 1.0;
  out.vector[0] = w[0];
  for (int i = 0; i + 1 < n; ++i) {
    delta *= std::sqrt(T.upper[i] / T.lower[i]);
    out.vector[i + 1] = w[i + 1] / delta;
  }
  return out;
}

}  // namespace nodalvar
