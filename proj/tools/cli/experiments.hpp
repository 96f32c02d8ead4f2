#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "expmde/autoquad.hpp"
#include "expmde/expm_de.hpp"
#include "expmde/matgen.hpp"

namespace expmde::cli {

/// Relative 2-norm error ‖X - ref‖₂/‖ref‖₂ (power-iteration estimates).
double rel_error_2norm(const ComplexMatrix& x, const ComplexMatrix& ref);

/// "a1", "a2" or a Matrix Market path.
ComplexMatrix resolve_matrix(const std::string& name, std::size_t n, std::uint64_t seed);

// Scalar error map -----------------------------------------------------------

struct Window {
  double re_lo, re_hi, im_lo, im_hi;
};

inline constexpr Window kScalarWindowNear{-30.0, 10.0, -20.0, 20.0};
inline constexpr Window kScalarWindowFar{-5000.0, 0.0, -2500.0, 2500.0};

struct ScalarMapConfig {
  std::vector<double> hs = {0.2, 0.1, 0.05};
  std::vector<Window> windows = {kScalarWindowNear, kScalarWindowFar};
  int re_points = 41;
  int im_points = 41;
  double eps = 2.2e-16;
  /// σ passed to get_interval; the scalar is not shifted.
  double sigma = kDefaultSigma;
};

struct ScalarMapRow {
  double re, im, h;
  /// NaN for Re(z) ≥ 0, where the integral representation does not hold.
  double abs_error;
};

/// |e^z - h Σ F_h(kh, z)| with e^z evaluated in long double.
double scalar_abs_error(cplx z, const DEParams& p, const TruncationInterval& iv);
/// Same error divided by |e^z| (long double); inf when e^z underflows.
double scalar_rel_error(cplx z, const DEParams& p, const TruncationInterval& iv);

std::vector<ScalarMapRow> scalar_map(const ScalarMapConfig& cfg);

// Shift sweep ----------------------------------------------------------------

/// For σ ≥ 0 the tail bound is undefined; those sweep points reuse the
/// interval of this σ so that the failure of the representation shows.
inline constexpr double kSweepIntervalSigma = -1.0;

struct ShiftSweepRow {
  double sigma;
  /// inf when a resolvent was singular.
  double rel_error;
  std::string note;
};

std::vector<double> default_sigma_grid();
std::vector<ShiftSweepRow> shift_sweep(const ComplexMatrix& a, const ComplexMatrix& ref,
                                       const std::vector<double>& sigmas, double h, double eps,
                                       const QuadOptions& opts);

// Adaptive mesh runs ---------------------------------------------------------

struct AutoquadTraceRow {
  double eps_target, h, err_measured;
  /// γe^{-ρ/h} from the last round that produced a rate estimate.
  std::optional<double> err_predicted;
};

struct AutoquadRun {
  double eps_target = 0.0;
  double eps_measured = 0.0;
  QuadResult result;
  AutoQuadReport report;
  std::vector<AutoquadTraceRow> trace;
};

AutoquadRun autoquad_run(const ComplexMatrix& a, const ComplexMatrix& ref, const AutoQuadConfig& cfg,
                         const QuadOptions& opts, bool with_trace);

// DE vs Talbot ---------------------------------------------------------------

struct CompareConfig {
  ConvDiffSpec spec;
  bool run_de = true;
  bool run_talbot = true;
  std::vector<double> hs = {0.2, 0.1, 0.05, 0.025, 0.0125};
  std::vector<int> ms = {16, 24, 32, 48, 64, 96, 128, 192, 256, 384, 512};
  double sigma = kDefaultSigma;
  double eps = 2.2e-16;
  EvalMode mode = EvalMode::Direct;
  unsigned threads = 1;
};

struct CompareRow {
  std::string method;
  long nodes;
  double rel_error;
  /// h for DE, m for Talbot.
  double parameter;
};

std::vector<CompareRow> compare_methods(const CompareConfig& cfg, const ComplexMatrix& a,
                                        const ComplexMatrix& ref);

/// Smallest error among rows of one method; inf if there are none.
double best_error(const std::vector<CompareRow>& rows, const std::string& method);

}  // namespace expmde::cli
