#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "expmde/expm_de.hpp"

namespace expmde {

struct AutoQuadConfig {
  double eps = 1e-10;
  double sigma = kDefaultSigma;
  double h1 = 0.4;
  /// Accept X̃₃ once the predicted error is below eta·eps.
  double eta = 10.0;
  double h_min = 1e-3;
  int max_rounds = 8;
  /// ε₁ ≤ stall_factor·ε₂ means the meshes are not yet in the exponential
  /// regime and the triple slides to smaller h.
  double stall_factor = 2.0;
};

enum class AutoQuadOutcome { PredictedConverged, RefinedOnce, ExhaustedRounds, HitMeshFloor };

const char* to_string(AutoQuadOutcome o) noexcept;

struct AutoQuadRound {
  double h1 = 0.0;
  double h2 = 0.0;
  double h3 = 0.0;
  double eps1 = 0.0;
  double eps2 = 0.0;
  /// Present only when eps1 > eps2 > 0.
  std::optional<double> rho;
  std::optional<double> gamma;
  std::optional<double> eps3_pred;
  /// Mesh proposed for the refinement step, when one was computed.
  std::optional<double> h4;
};

struct AutoQuadReport {
  std::vector<AutoQuadRound> rounds;
  double final_h = 0.0;
  TruncationInterval final_interval;
  AutoQuadOutcome outcome = AutoQuadOutcome::ExhaustedRounds;
  /// ‖X̃₄ - X̃₃‖₂ on the refinement path; report only.
  std::optional<double> refine_delta;
  /// Every (h, X̃) assembly in evaluation order, for error traces.
  std::vector<double> meshes_evaluated;
  int assemblies = 0;
};

struct RateEstimate {
  double rho;
  double gamma;
};

/// ρ = h₁h₂/(h₁-h₂)·log(ε₁/ε₂), γ = ε₁·e^{ρ/h₁}. Throws DegenerateEstimate
/// when ε₂ = 0 or ε₁ ≤ ε₂.
RateEstimate estimate_rate(double h1, double h2, double eps1, double eps2);

/// γ·e^{-ρ/h}.
double predict_error(double rho, double gamma, double h);

/// ρ/log(γ/(η·ε)). Throws MeshFloor if the result is below h_min.
double next_mesh(double rho, double gamma, double eta, double eps, double h_min);

enum class AutoQuadStep { AcceptFinest, Refine, Slide };

/// Decision for one round given h1..h3 and ε₁, ε₂ in `rec`; fills rho,
/// gamma, eps3_pred and h4 when they can be computed.
AutoQuadStep decide_step(AutoQuadRound& rec, const AutoQuadConfig& cfg);

/// Automatic mesh selection on top of the fixed-mesh quadrature.
std::pair<QuadResult, AutoQuadReport> expm_auto(const ComplexMatrix& a, const AutoQuadConfig& cfg,
                                                const QuadOptions& opts = {});

}  // namespace expmde
