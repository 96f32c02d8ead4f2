#pragma once

#include <optional>
#include <string>
#include <vector>

#include "expmde/detransform.hpp"
#include "expmde/matrix.hpp"
#include "expmde/truncation.hpp"

namespace expmde {

/// How the resolvent (x²I + A²)⁻¹ is applied at each node. Split trades one
/// solve for two, (i/2x)[(ixI + A)⁻¹ - (-ixI + A)⁻¹], and avoids squaring
/// the condition number of A.
enum class EvalMode { Direct, Split };

inline constexpr double kDefaultSigma = -2.5;

struct QuadOptions {
  EvalMode mode = EvalMode::Direct;
  DeVariant variant = DeVariant::Ooura1999;
  int tail_terms = kDefaultTailTerms;
  /// Node-level parallelism; the result is bit-identical for any value.
  unsigned threads = 1;
  /// Check x_h(lh) ≤ 1/sqrt(2‖Ã⁻²‖) after the fact and record a warning.
  bool check_left_condition = false;
};

struct QuadResult {
  ComplexMatrix X;
  TruncationInterval interval;
  DEParams params;
  EvalMode mode = EvalMode::Direct;
  cplx lambda_right;
  /// λ_right - σ; X = e^{shift_applied}·X̃.
  cplx shift_applied;
  long nodes_evaluated = 0;
  /// False when e^{shift_applied} overflows; X then holds the unscaled X̃.
  bool scaled = true;
  std::optional<LeftConditionCheck> left_condition;
  std::vector<std::string> warnings;
};

/// h·F_h(kh, A) = h·x_h'·sin(x_h)·(2/π)·x_h·(x_h²I + A²)⁻¹ at t = kh.
ComplexMatrix quad_term(const DEParams& p, long k, const ComplexMatrix& a, EvalMode mode);

/// h Σ_{k=l}^{r} F_h(kh, Ã), accumulated in ascending k.
ComplexMatrix expm_de_core(const ComplexMatrix& a_shifted, const DEParams& p,
                           const TruncationInterval& iv, EvalMode mode, unsigned threads = 1);

/// Fixed-mesh DE quadrature for e^A with shifting to σ < 0.
QuadResult expm_de(const ComplexMatrix& a, double h, double eps, double sigma = kDefaultSigma,
                   const QuadOptions& opts = {});

/// Same as expm_de with a caller-supplied interval and no sign check on σ.
/// Used by experiments that deliberately probe σ ≥ 0.
QuadResult expm_de_with_interval(const ComplexMatrix& a, const DEParams& p, double sigma,
                                 const TruncationInterval& iv, const QuadOptions& opts = {});

/// A + (σ - λ_right)I.
ComplexMatrix shift_to(const ComplexMatrix& a, cplx lambda_right, double sigma);

/// Scalar version of expm_de_core without shifting: h Σ F_h(kh, z).
cplx expm_de_scalar(cplx z, const DEParams& p, const TruncationInterval& iv);

}  // namespace expmde
