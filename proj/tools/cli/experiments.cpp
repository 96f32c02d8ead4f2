#include "experiments.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "expmde/densela.hpp"
#include "expmde/errors.hpp"
#include "expmde/talbot.hpp"
#include "mmio.hpp"

namespace expmde::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::complex<long double> exp_wide(cplx z) {
  return std::exp(std::complex<long double>(z.real(), z.imag()));
}

long double wide_abs_error(cplx z, const DEParams& p, const TruncationInterval& iv, long double& mag) {
  const std::complex<long double> ref = exp_wide(z);
  const cplx approx = expm_de_scalar(z, p, iv);
  mag = std::abs(ref);
  return std::abs(std::complex<long double>(approx.real(), approx.imag()) - ref);
}

std::vector<double> linspace(double lo, double hi, int points) {
  std::vector<double> v(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i)
    v[static_cast<std::size_t>(i)] = points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
  return v;
}

}  // namespace

double rel_error_2norm(const ComplexMatrix& x, const ComplexMatrix& ref) {
  const double denom = norm2(ref);
  const double num = norm2(x - ref);
  if (denom == 0.0) return num == 0.0 ? 0.0 : kInf;
  return num / denom;
}

ComplexMatrix resolve_matrix(const std::string& name, std::size_t n, std::uint64_t seed) {
  if (name == "a1" || name == "a2") return test_matrix({name == "a1" ? 1 : 2, n, seed});
  return read_matrix_market_file(name);
}

double scalar_abs_error(cplx z, const DEParams& p, const TruncationInterval& iv) {
  long double mag = 0;
  return static_cast<double>(wide_abs_error(z, p, iv, mag));
}

double scalar_rel_error(cplx z, const DEParams& p, const TruncationInterval& iv) {
  long double mag = 0;
  const long double err = wide_abs_error(z, p, iv, mag);
  if (mag == 0.0L) return kInf;
  return static_cast<double>(err / mag);
}

std::vector<ScalarMapRow> scalar_map(const ScalarMapConfig& cfg) {
  if (cfg.re_points < 1 || cfg.im_points < 1) throw InvalidArgument("scalar_map: grid must be positive");
  std::vector<ScalarMapRow> rows;
  for (const Window& w : cfg.windows) {
    if (!(w.re_lo <= w.re_hi) || !(w.im_lo <= w.im_hi)) throw InvalidArgument("scalar_map: empty range");
    const auto res = linspace(w.re_lo, w.re_hi, cfg.re_points);
    const auto ims = linspace(w.im_lo, w.im_hi, cfg.im_points);
    for (double h : cfg.hs) {
      const DEParams p = make_params(h);
      const TruncationInterval iv = get_interval(p, cfg.sigma, cfg.eps);
      for (double im : ims)
        for (double re : res) {
          const double err = re < 0.0 ? scalar_abs_error(cplx(re, im), p, iv)
                                      : std::numeric_limits<double>::quiet_NaN();
          rows.push_back({re, im, h, err});
        }
    }
  }
  return rows;
}

std::vector<double> default_sigma_grid() {
  std::vector<double> s;
  for (int i = 0; i <= 60; ++i) s.push_back(-10.0 + 0.25 * i);
  return s;
}

std::vector<ShiftSweepRow> shift_sweep(const ComplexMatrix& a, const ComplexMatrix& ref,
                                       const std::vector<double>& sigmas, double h, double eps,
                                       const QuadOptions& opts) {
  const DEParams p = make_params(h, opts.variant);
  const TruncationInterval iv_fallback = get_interval(p, kSweepIntervalSigma, eps, opts.tail_terms);
  std::vector<ShiftSweepRow> rows;
  for (double sigma : sigmas) {
    ShiftSweepRow row{sigma, kInf, ""};
    const bool valid = sigma < 0.0;
    const TruncationInterval iv = valid ? get_interval(p, sigma, eps, opts.tail_terms) : iv_fallback;
    if (!valid) row.note = "sigma >= 0: representation invalid";
    try {
      const QuadResult r = expm_de_with_interval(a, p, sigma, iv, opts);
      row.rel_error = rel_error_2norm(r.X, ref);
    } catch (const SingularMatrix& e) {
      row.note = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

AutoquadRun autoquad_run(const ComplexMatrix& a, const ComplexMatrix& ref, const AutoQuadConfig& cfg,
                         const QuadOptions& opts, bool with_trace) {
  AutoquadRun run;
  run.eps_target = cfg.eps;
  auto [result, report] = expm_auto(a, cfg, opts);
  run.eps_measured = rel_error_2norm(result.X, ref);
  run.result = std::move(result);
  run.report = std::move(report);
  if (!with_trace) return run;

  std::optional<std::pair<double, double>> rate;
  for (const auto& rd : run.report.rounds)
    if (rd.rho && rd.gamma) rate = std::make_pair(*rd.rho, *rd.gamma);

  std::vector<double> meshes = run.report.meshes_evaluated;
  std::sort(meshes.begin(), meshes.end(), std::greater<>());
  meshes.erase(std::unique(meshes.begin(), meshes.end()), meshes.end());
  for (double h : meshes) {
    const QuadResult r = expm_de(a, h, cfg.eps / 2.0, cfg.sigma, opts);
    AutoquadTraceRow row{cfg.eps, h, rel_error_2norm(r.X, ref), std::nullopt};
    if (rate) row.err_predicted = predict_error(rate->first, rate->second, h);
    run.trace.push_back(row);
  }
  return run;
}

std::vector<CompareRow> compare_methods(const CompareConfig& cfg, const ComplexMatrix& a,
                                        const ComplexMatrix& ref) {
  std::vector<CompareRow> rows;
  if (cfg.run_de) {
    QuadOptions opts;
    opts.mode = cfg.mode;
    opts.threads = cfg.threads;
    for (double h : cfg.hs) {
      const DEParams p = make_params(h);
      const TruncationInterval iv = get_interval(p, cfg.sigma, cfg.eps);
      double err = kInf;
      try {
        err = rel_error_2norm(expm_de_with_interval(a, p, cfg.sigma, iv, opts).X, ref);
      } catch (const SingularMatrix&) {
      }
      rows.push_back({"de", iv.nodes(), err, h});
    }
  }
  if (cfg.run_talbot) {
    for (int m : cfg.ms) {
      TalbotParams tp;
      tp.m = m;
      double err = kInf;
      try {
        err = rel_error_2norm(expm_talbot(a, tp, cfg.threads), ref);
      } catch (const SingularMatrix&) {
      }
      rows.push_back({"talbot", m, err, static_cast<double>(m)});
    }
  }
  return rows;
}

double best_error(const std::vector<CompareRow>& rows, const std::string& method) {
  double best = kInf;
  for (const auto& r : rows)
    if (r.method == method && !std::isnan(r.rel_error)) best = std::min(best, r.rel_error);
  return best;
}

}  // namespace expmde::cli
