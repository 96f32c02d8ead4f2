#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "expmde/matrix.hpp"

namespace expmde {

struct RandSvdSpec {
  std::size_t n = 50;
  double kappa = 100.0;
  std::uint64_t seed = 1;
};

/// Z = U·Σ·Vᴴ with Haar-like unitary U, V (QR of seeded complex Gaussian
/// matrices) and singular values spaced geometrically from 1 to 1/kappa.
ComplexMatrix randsvd(const RandSvdSpec& spec);

struct TestMatrixSpec {
  int k = 1;
  std::size_t n = 50;
  std::uint64_t seed = 1;
  /// When false every ν_i is zero and D is real.
  bool imag_noise = true;
  double kappa = 100.0;
};

/// Pieces of A = Z·D·Z⁻¹.
struct SimilarityParts {
  ComplexMatrix z;
  std::vector<cplx> d;
};

/// d_i = 1 - 10^{2k(i-1)/(n-1)} + i·ν_i/20 (i = 1..n), ν_i standard normal.
SimilarityParts test_matrix_parts(const TestMatrixSpec& spec);
ComplexMatrix test_matrix(const TestMatrixSpec& spec);
/// Z·f(D)·Z⁻¹ for the given parts.
ComplexMatrix assemble_similarity(const SimilarityParts& parts, const std::vector<cplx>& diag);

struct ConvDiffSpec {
  std::size_t grid_n = 20;
  double d = 0.01;
  std::array<double, 2> c = {0.2, 0.2};
};

/// Centered 5-point discretization of d Δu - c·∇u on the unit square with
/// homogeneous Dirichlet data and mesh width 1/(grid_n+1). Unknowns are
/// numbered x-fastest: p = i + j·grid_n.
ComplexMatrix convection_diffusion(const ConvDiffSpec& spec);

}  // namespace expmde
