#include "expmde/matgen.hpp"

#include <cmath>

#include "expmde/densela.hpp"
#include "expmde/errors.hpp"
#include "expmde/random.hpp"

namespace expmde {

namespace {

ComplexMatrix gaussian_matrix(std::size_t n, SplitMix64& rng) {
  ComplexMatrix g(n, n);
  const double s = 1.0 / std::sqrt(2.0);
  for (auto& z : g.data()) {
    const double re = rng.normal();
    const double im = rng.normal();
    z = cplx(s * re, s * im);
  }
  return g;
}

}  // namespace

ComplexMatrix randsvd(const RandSvdSpec& spec) {
  if (spec.n == 0) throw InvalidArgument("randsvd: n must be positive");
  if (!(spec.kappa >= 1.0)) throw InvalidArgument("randsvd: kappa must be >= 1");
  const std::size_t n = spec.n;
  SplitMix64 rng(spec.seed);
  const ComplexMatrix u = qr_unitary(gaussian_matrix(n, rng));
  const ComplexMatrix v = qr_unitary(gaussian_matrix(n, rng));

  ComplexMatrix us = u;
  for (std::size_t j = 0; j < n; ++j) {
    const double frac = n == 1 ? 0.0 : static_cast<double>(j) / static_cast<double>(n - 1);
    const double sigma = std::pow(spec.kappa, -frac);
    for (auto& z : us.col(j)) z *= sigma;
  }
  return us * v.adjoint();
}

SimilarityParts test_matrix_parts(const TestMatrixSpec& spec) {
  if (spec.k < 1) throw InvalidArgument("test_matrix: k must be positive");
  if (spec.n < 2) throw InvalidArgument("test_matrix: n must be at least 2");
  SimilarityParts parts;
  parts.z = randsvd({spec.n, spec.kappa, spec.seed});
  SplitMix64 nu_rng(derive_seed(spec.seed, 1));
  parts.d.resize(spec.n);
  const double denom = static_cast<double>(spec.n - 1);
  for (std::size_t i = 0; i < spec.n; ++i) {
    const double re = 1.0 - std::pow(10.0, 2.0 * spec.k * static_cast<double>(i) / denom);
    const double nu = spec.imag_noise ? nu_rng.normal() : 0.0;
    parts.d[i] = cplx(re, nu / 20.0);
  }
  return parts;
}

ComplexMatrix assemble_similarity(const SimilarityParts& parts, const std::vector<cplx>& diag) {
  if (diag.size() != parts.z.rows()) throw InvalidArgument("assemble_similarity: size mismatch");
  // A = Z D Z⁻¹  <=>  Aᴴ = Z⁻ᴴ (Z D)ᴴ, solved against Zᴴ.
  ComplexMatrix zd = parts.z;
  for (std::size_t j = 0; j < diag.size(); ++j)
    for (auto& z : zd.col(j)) z *= diag[j];
  return lu_solve(lu_factor(parts.z.adjoint()), zd.adjoint()).adjoint();
}

ComplexMatrix test_matrix(const TestMatrixSpec& spec) {
  const SimilarityParts parts = test_matrix_parts(spec);
  return assemble_similarity(parts, parts.d);
}

ComplexMatrix convection_diffusion(const ConvDiffSpec& spec) {
  if (spec.grid_n < 3) throw InvalidArgument("convection_diffusion: grid_n must be at least 3");
  if (!(spec.d > 0.0)) throw InvalidArgument("convection_diffusion: d must be positive");
  const std::size_t m = spec.grid_n;
  const double h = 1.0 / static_cast<double>(m + 1);
  const double diff = spec.d / (h * h);
  const double cx = spec.c[0] / (2.0 * h);
  const double cy = spec.c[1] / (2.0 * h);

  ComplexMatrix a(m * m, m * m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t p = i + j * m;
      a(p, p) = -4.0 * diff;
      if (i + 1 < m) a(p, p + 1) = diff - cx;
      if (i > 0) a(p, p - 1) = diff + cx;
      if (j + 1 < m) a(p, p + m) = diff - cy;
      if (j > 0) a(p, p - m) = diff + cy;
    }
  }
  return a;
}

}  // namespace expmde
