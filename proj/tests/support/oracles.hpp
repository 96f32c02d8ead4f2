#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library routine it is used to check.

#include <complex>
#include <cstdint>
#include <vector>

#include "expmde/detransform.hpp"
#include "expmde/matrix.hpp"

namespace oracle {

using expmde::ComplexMatrix;
using expmde::cplx;
using wide = long double;
using wcplx = std::complex<long double>;

/// Singular values (descending) by one-sided Jacobi in long double.
std::vector<double> singular_values(const ComplexMatrix& a);

/// α of the 1999 transform evaluated in long double.
wide alpha_1999(wide h);

/// The transform evaluated directly from its defining quotient in long
/// double (no series, no special branches). Valid for |t| ≳ 1e-6.
wide x_of(const expmde::DEParams& p, wide t);
wide x_deriv_of(const expmde::DEParams& p, wide t);
wide u_of(const expmde::DEParams& p, wide t);

/// (h/π) Σ_{k=l-terms}^{l-1} x'(kh) in long double, smallest terms first.
wide left_tail(const expmde::DEParams& p, long l, int terms);
/// (4π(1+√2)/|σ|) Σ_{k=r+1}^{r+terms} k u(kh) in long double.
wide right_tail(const expmde::DEParams& p, long r, double sigma, int terms);

/// Plain Gaussian elimination inverse in long double.
ComplexMatrix inverse(const ComplexMatrix& a);

/// Frobenius norm of a - b.
double fro_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double fro(const ComplexMatrix& a);

/// Dense matrix with entries uniform in the unit disk.
ComplexMatrix random_disk(std::size_t rows, std::size_t cols, std::uint64_t seed);

/// Z·diag(f)·Z⁻¹ with the inverse from `inverse` above.
ComplexMatrix similarity(const ComplexMatrix& z, const std::vector<cplx>& diag);

}  // namespace oracle
