#pragma once

#include "expmde/matrix.hpp"

namespace expmde {

struct PadeConfig {
  /// A is scaled by 2^{-s} until ‖A‖₁ is at most this value.
  double scaling_threshold = 5.37;
};

/// Scaling and squaring with the [13/13] diagonal Padé approximant.
ComplexMatrix expm_pade(const ComplexMatrix& a, const PadeConfig& cfg = {});

/// Same algorithm carried out in long double and rounded once at the end.
/// Used as the error oracle: on matrices that need many squarings the
/// double version loses several digits to the squaring phase.
ComplexMatrix expm_pade_extended(const ComplexMatrix& a, const PadeConfig& cfg = {});

/// Number of squarings expm_pade uses for `a`.
int pade_scaling_power(const ComplexMatrix& a, const PadeConfig& cfg = {});

/// Σ_{j<terms} A^j/j!. Requires ‖A‖₁ ≤ 1; independent of the Padé path.
ComplexMatrix expm_taylor(const ComplexMatrix& a, int terms = 30);

}  // namespace expmde
