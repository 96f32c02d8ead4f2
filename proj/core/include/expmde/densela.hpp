#pragma once

#include <cstddef>
#include <vector>

#include "expmde/matrix.hpp"

namespace expmde {

/// Row-pivoted LU factors P·M = L·U. L (unit lower) and U share `lu`;
/// `perm[i]` is the row of M that ended up in row i.
struct LUFactors {
  ComplexMatrix lu;
  std::vector<std::size_t> perm;

  std::size_t size() const noexcept { return lu.rows(); }
};

/// Throws SingularMatrix when a pivot magnitude is below n·u·‖M‖∞.
LUFactors lu_factor(ComplexMatrix m);
ComplexMatrix lu_solve(const LUFactors& f, ComplexMatrix b);
ComplexMatrix inverse(const ComplexMatrix& m);

double norm_1(const ComplexMatrix& a);
double norm_inf(const ComplexMatrix& a);
double norm_fro(const ComplexMatrix& a);

struct Norm2Estimate {
  double value = 0.0;
  int iterations = 0;
  /// Set when the iteration cap was hit; `value` is then the Frobenius norm.
  bool degraded = false;
};

/// Largest singular value by power iteration on AᴴA from the all-ones vector.
Norm2Estimate norm2_estimate(const ComplexMatrix& a, double rel_tol = 1e-6, int max_iter = 500);

/// Shorthand for norm2_estimate(a).value.
double norm2(const ComplexMatrix& a);

/// Unitary factor Q of a Householder QR with diag(R) made real and
/// non-negative, so Q is a deterministic function of the input.
ComplexMatrix qr_unitary(const ComplexMatrix& m);

struct EigenOptions {
  /// Relative size below which a subdiagonal entry is treated as zero.
  double deflation_tol = 2.220446049250313e-16;
  /// QR sweeps allowed per unit of dimension.
  int sweeps_per_dim = 30;
};

/// Eigenvalues sorted by descending real part, ties by descending imaginary part.
struct Spectrum {
  std::vector<cplx> eigenvalues;
};

/// Householder reduction to upper Hessenberg form followed by
/// Wilkinson-shifted complex QR with deflation. Throws NoConvergence.
Spectrum eigenvalues(const ComplexMatrix& a, const EigenOptions& opts = {});

/// Eigenvalue with maximal real part. Real parts within a few ulps of the
/// maximum count as tied; the tie goes to the larger imaginary part.
cplx rightmost_eigenvalue(const ComplexMatrix& a, const EigenOptions& opts = {});
cplx rightmost_of(const Spectrum& s);

}  // namespace expmde
