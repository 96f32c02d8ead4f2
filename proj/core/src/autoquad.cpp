#include "expmde/autoquad.hpp"

#include <cmath>
#include <string>

#include "expmde/densela.hpp"
#include "expmde/errors.hpp"

namespace expmde {

const char* to_string(AutoQuadOutcome o) noexcept {
  switch (o) {
    case AutoQuadOutcome::PredictedConverged: return "predicted_converged";
    case AutoQuadOutcome::RefinedOnce: return "refined_once";
    case AutoQuadOutcome::ExhaustedRounds: return "exhausted_rounds";
    case AutoQuadOutcome::HitMeshFloor: return "hit_mesh_floor";
  }
  return "unknown";
}

RateEstimate estimate_rate(double h1, double h2, double eps1, double eps2) {
  if (!(h1 > h2 && h2 > 0.0)) throw InvalidArgument("estimate_rate: need h1 > h2 > 0");
  if (!(eps2 > 0.0) || !(eps1 > eps2)) {
    throw DegenerateEstimate("estimate_rate: need eps1 > eps2 > 0 (got " + std::to_string(eps1) +
                             ", " + std::to_string(eps2) + ")");
  }
  const double rho = h1 * h2 / (h1 - h2) * std::log(eps1 / eps2);
  return {rho, eps1 * std::exp(rho / h1)};
}

double predict_error(double rho, double gamma, double h) { return gamma * std::exp(-rho / h); }

double next_mesh(double rho, double gamma, double eta, double eps, double h_min) {
  if (!(rho > 0.0) || !(gamma > eta * eps)) {
    throw InvalidArgument("next_mesh: need rho > 0 and gamma > eta*eps");
  }
  const double h = rho / std::log(gamma / (eta * eps));
  if (h < h_min) throw MeshFloor("next_mesh: h4 below h_min", h);
  return h;
}

namespace {

void validate(const AutoQuadConfig& cfg) {
  if (!(cfg.eps > 0.0)) throw InvalidArgument("expm_auto: eps must be positive");
  if (!(cfg.sigma < 0.0)) throw InvalidArgument("expm_auto: sigma must be negative");
  if (!(cfg.h_min > 0.0) || !(cfg.h1 > cfg.h_min)) throw InvalidArgument("expm_auto: need h1 > h_min > 0");
  if (!(cfg.eta > 0.0)) throw InvalidArgument("expm_auto: eta must be positive");
  if (cfg.max_rounds < 1) throw InvalidArgument("expm_auto: max_rounds must be at least 1");
  if (!(cfg.stall_factor > 1.0)) throw InvalidArgument("expm_auto: stall_factor must exceed 1");
}

}  // namespace

AutoQuadStep decide_step(AutoQuadRound& rec, const AutoQuadConfig& cfg) {
  // Indistinguishable at working precision.
  if (rec.eps2 == 0.0 || rec.eps1 == rec.eps2) return AutoQuadStep::AcceptFinest;

  bool slide = rec.eps1 <= cfg.stall_factor * rec.eps2;
  if (rec.eps1 > rec.eps2) {
    const RateEstimate est = estimate_rate(rec.h1, rec.h2, rec.eps1, rec.eps2);
    rec.rho = est.rho;
    rec.gamma = est.gamma;
    rec.eps3_pred = predict_error(est.rho, est.gamma, rec.h3);
    if (*rec.eps3_pred < cfg.eta * cfg.eps) return AutoQuadStep::AcceptFinest;
    rec.h4 = est.rho / std::log(est.gamma / (cfg.eta * cfg.eps));
    if (*rec.h4 < cfg.h_min) slide = true;
  }
  return slide ? AutoQuadStep::Slide : AutoQuadStep::Refine;
}

namespace {

struct Assembly {
  double h;
  TruncationInterval iv;
  DEParams p;
  ComplexMatrix X;
};

}  // namespace

std::pair<QuadResult, AutoQuadReport> expm_auto(const ComplexMatrix& a, const AutoQuadConfig& cfg,
                                                const QuadOptions& opts) {
  validate(cfg);
  if (!a.is_square() || a.empty()) throw InvalidArgument("expm_auto: matrix must be square");

  const cplx lambda = rightmost_eigenvalue(a);
  const ComplexMatrix shifted = shift_to(a, lambda, cfg.sigma);
  const double half_eps = cfg.eps / 2.0;
  AutoQuadReport report;

  auto assemble = [&](double h) {
    Assembly out{h, {}, make_params(h, opts.variant), {}};
    out.iv = get_interval(out.p, cfg.sigma, half_eps, opts.tail_terms);
    out.X = expm_de_core(shifted, out.p, out.iv, opts.mode, opts.threads);
    report.meshes_evaluated.push_back(h);
    ++report.assemblies;
    return out;
  };

  auto finish = [&](Assembly&& best, AutoQuadOutcome outcome) {
    QuadResult res;
    res.lambda_right = lambda;
    res.shift_applied = lambda - cfg.sigma;
    res.params = best.p;
    res.interval = best.iv;
    res.mode = opts.mode;
    res.nodes_evaluated = best.iv.nodes();
    res.X = std::move(best.X);
    const cplx scale = std::exp(res.shift_applied);
    if (std::isfinite(scale.real()) && std::isfinite(scale.imag())) {
      res.X *= scale;
    } else {
      res.scaled = false;
      res.warnings.push_back("exp(lambda_right - sigma) overflows; X holds the unscaled result");
    }
    report.final_h = best.h;
    report.final_interval = best.iv;
    report.outcome = outcome;
    return std::pair<QuadResult, AutoQuadReport>{std::move(res), std::move(report)};
  };

  Assembly x1 = assemble(cfg.h1);
  Assembly x2 = assemble(cfg.h1 / 2.0);
  Assembly x3 = assemble(cfg.h1 / 4.0);

  for (int round = 1; round <= cfg.max_rounds; ++round) {
    AutoQuadRound rec;
    rec.h1 = x1.h;
    rec.h2 = x2.h;
    rec.h3 = x3.h;
    rec.eps1 = norm2(x1.X - x3.X);
    rec.eps2 = norm2(x2.X - x3.X);

    const AutoQuadStep step = decide_step(rec, cfg);
    report.rounds.push_back(rec);
    if (step == AutoQuadStep::AcceptFinest) return finish(std::move(x3), AutoQuadOutcome::PredictedConverged);

    if (step == AutoQuadStep::Refine) {
      Assembly x4 = assemble(*rec.h4);
      report.refine_delta = norm2(x4.X - x3.X);
      return finish(std::move(x4), AutoQuadOutcome::RefinedOnce);
    }

    const double h_next = x3.h / 2.0;
    if (h_next < cfg.h_min) return finish(std::move(x3), AutoQuadOutcome::HitMeshFloor);
    if (round == cfg.max_rounds) break;
    x1 = std::move(x2);
    x2 = std::move(x3);
    x3 = assemble(h_next);
  }
  return finish(std::move(x3), AutoQuadOutcome::ExhaustedRounds);
}

}  // namespace expmde
