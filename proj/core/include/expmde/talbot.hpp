#pragma once

#include "expmde/matrix.hpp"
#include "expmde/talbot_constants.hpp"

namespace expmde {

struct TalbotParams {
  int m = 32;
  double sigma_t = talbot_constants::kSigma;
  double mu_t = talbot_constants::kMu;
  double alpha_t = talbot_constants::kAlpha;
  double nu_t = talbot_constants::kNu;
};

/// z(θ) and z'(θ) on the contour.
cplx talbot_node(const TalbotParams& p, double theta);
cplx talbot_node_deriv(const TalbotParams& p, double theta);

/// Midpoint rule for (1/2πi)∫ e^z (zI - A)⁻¹ dz over θ_j = -π + (j + 1/2)·2π/m.
/// For real A only the upper half of the nodes is evaluated and the result
/// is (2/m)·Im Σ e^{z_j} z'_j (z_j I - A)⁻¹, which is exactly real.
ComplexMatrix expm_talbot(const ComplexMatrix& a, const TalbotParams& p, unsigned threads = 1);

}  // namespace expmde
