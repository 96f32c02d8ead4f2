#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "experiments.hpp"
#include "expmde/errors.hpp"
#include "expmde/reference.hpp"
#include "format.hpp"
#include "manifest.hpp"
#include "mmio.hpp"

namespace expmde::cli {

namespace {

using nlohmann::json;

json cplx_json(cplx z) { return json::array({z.real(), z.imag()}); }

json interval_json(const TruncationInterval& iv) {
  return {{"l", iv.l}, {"r", iv.r}, {"left_bound", iv.left_bound}, {"right_bound", iv.right_bound},
          {"epsilon", iv.epsilon}};
}

json opt_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

EvalMode parse_mode(const std::string& s) { return s == "split" ? EvalMode::Split : EvalMode::Direct; }
const char* mode_name(EvalMode m) { return m == EvalMode::Split ? "split" : "direct"; }

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::out | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  return out;
}

std::array<double, 2> parse_pair(const std::string& text, const std::string& what) {
  const auto v = parse_real_list(text);
  if (v.size() != 2) throw InputError(what + " needs two comma-separated numbers, got '" + text + "'");
  return {v[0], v[1]};
}

// --- expm -------------------------------------------------------------------

struct ExpmArgs {
  std::string input, out, mode = "direct", variant = "1999";
  double h = 0.1, eps = 2.2e-16, sigma = kDefaultSigma, eta = 10.0, h_min = 1e-3, h1 = 0.4;
  bool automatic = false, check_left = false;
  unsigned threads = 1;
};

int cmd_expm(const ExpmArgs& a, std::ostream& out) {
  const ComplexMatrix m = read_matrix_market_file(a.input);
  QuadOptions opts;
  opts.mode = parse_mode(a.mode);
  opts.variant = a.variant == "1991" ? DeVariant::Ooura1991 : DeVariant::Ooura1999;
  opts.threads = a.threads;
  opts.check_left_condition = a.check_left;

  json params = {{"input", a.input}, {"out", a.out},       {"h", a.h},         {"eps", a.eps},
                 {"sigma", a.sigma}, {"mode", a.mode},     {"variant", a.variant}, {"auto", a.automatic},
                 {"eta", a.eta},     {"h_min", a.h_min},   {"h1", a.h1},       {"threads", a.threads},
                 {"check_left", a.check_left}};

  QuadResult res;
  json record = {{"command", "expm"}, {"input", a.input}};
  if (a.automatic) {
    AutoQuadConfig cfg;
    cfg.eps = a.eps;
    cfg.sigma = a.sigma;
    cfg.h1 = a.h1;
    cfg.eta = a.eta;
    cfg.h_min = a.h_min;
    auto [r, report] = expm_auto(m, cfg, opts);
    res = std::move(r);
    json rounds = json::array();
    std::optional<double> predicted;
    for (const auto& rd : report.rounds) {
      rounds.push_back({{"h1", rd.h1}, {"h2", rd.h2}, {"h3", rd.h3}, {"eps1", rd.eps1}, {"eps2", rd.eps2},
                        {"rho", opt_json(rd.rho)}, {"gamma", opt_json(rd.gamma)},
                        {"eps3_pred", opt_json(rd.eps3_pred)}, {"h4", opt_json(rd.h4)}});
      if (rd.rho && rd.gamma) predicted = predict_error(*rd.rho, *rd.gamma, report.final_h);
    }
    if (report.outcome == AutoQuadOutcome::PredictedConverged && !report.rounds.empty() &&
        report.rounds.back().eps2 == 0.0)
      predicted = 0.0;
    record["auto"] = {{"outcome", to_string(report.outcome)}, {"final_h", report.final_h},
                      {"rounds", rounds},  {"predicted_error", opt_json(predicted)},
                      {"eta_eps", a.eta * a.eps}, {"refine_delta", opt_json(report.refine_delta)},
                      {"assemblies", report.assemblies}};
  } else {
    res = expm_de(m, a.h, a.eps, a.sigma, opts);
  }

  record["h"] = res.params.h;
  record["alpha"] = res.params.alpha;
  record["beta"] = res.params.beta;
  record["mode"] = mode_name(res.mode);
  record["interval"] = interval_json(res.interval);
  record["nodes"] = res.nodes_evaluated;
  record["lambda_right"] = cplx_json(res.lambda_right);
  record["shift_applied"] = cplx_json(res.shift_applied);
  record["scaled"] = res.scaled;
  record["scale_factor"] = cplx_json(std::exp(res.shift_applied));
  if (res.left_condition)
    record["left_condition"] = {{"x_left", res.left_condition->x_left},
                                {"threshold", res.left_condition->threshold},
                                {"satisfied", res.left_condition->satisfied}};
  record["warnings"] = res.warnings;

  auto f = open_out(a.out);
  write_matrix_market_array(f, res.X);
  append_metadata(a.out, record, true);
  write_manifest(a.out, make_manifest("expm", params));
  for (const auto& w : res.warnings) out << "warning: " << w << '\n';
  return kExitOk;
}

// --- scalar-map ---------------------------------------------------------------

struct ScalarMapArgs {
  std::string out, hs = "0.2,0.1,0.05", re_range, im_range, grid = "41,41";
  double eps = 2.2e-16, sigma = kDefaultSigma;
};

int cmd_scalar_map(const ScalarMapArgs& a) {
  ScalarMapConfig cfg;
  cfg.hs = parse_real_list(a.hs);
  for (double h : cfg.hs)
    if (!(h > 0.0)) throw InputError("--h values must be positive");
  const auto g = parse_pair(a.grid, "--grid");
  if (g[0] < 1 || g[1] < 1 || g[0] != std::floor(g[0]) || g[1] != std::floor(g[1]))
    throw InputError("--grid needs two positive integers");
  cfg.re_points = static_cast<int>(g[0]);
  cfg.im_points = static_cast<int>(g[1]);
  cfg.eps = a.eps;
  cfg.sigma = a.sigma;
  if (!a.re_range.empty() || !a.im_range.empty()) {
    if (a.re_range.empty() || a.im_range.empty()) throw InputError("--re-range and --im-range go together");
    const auto re = parse_pair(a.re_range, "--re-range");
    const auto im = parse_pair(a.im_range, "--im-range");
    if (!(re[0] <= re[1]) || !(im[0] <= im[1])) throw InputError("ranges must be ordered low,high");
    cfg.windows = {Window{re[0], re[1], im[0], im[1]}};
  }

  const auto rows = scalar_map(cfg);
  auto f = open_out(a.out);
  f << "re,im,h,abs_error\n";
  long invalid = 0;
  for (const auto& r : rows) {
    f << fmt17(r.re) << ',' << fmt17(r.im) << ',' << fmt17(r.h) << ',' << fmt17(r.abs_error) << '\n';
    invalid += std::isnan(r.abs_error) ? 1 : 0;
  }
  json windows = json::array();
  for (const auto& w : cfg.windows) windows.push_back({w.re_lo, w.re_hi, w.im_lo, w.im_hi});
  append_metadata(a.out, {{"command", "scalar-map"}, {"rows", rows.size()}, {"invalid_cells", invalid}}, true);
  write_manifest(a.out, make_manifest("scalar-map", {{"h", cfg.hs},
                                                     {"windows", windows},
                                                     {"grid", {cfg.re_points, cfg.im_points}},
                                                     {"eps", cfg.eps},
                                                     {"sigma", cfg.sigma},
                                                     {"out", a.out}}));
  return kExitOk;
}

// --- shift-sweep --------------------------------------------------------------

struct MatrixArgs {
  std::string matrix = "a1";
  std::size_t n = 50;
  std::uint64_t seed = 1;
};

json matrix_params(const MatrixArgs& m) { return {{"matrix", m.matrix}, {"n", m.n}, {"seed", m.seed}}; }

json matrix_seeds(const MatrixArgs& m) {
  return m.matrix == "a1" || m.matrix == "a2" ? json::array({m.seed}) : json::array();
}

struct ShiftSweepArgs {
  MatrixArgs m;
  std::string out, sigmas, mode = "split";
  double h = 0.05, eps = 2.2e-16;
  unsigned threads = 1;
};

int cmd_shift_sweep(const ShiftSweepArgs& a) {
  const ComplexMatrix mat = resolve_matrix(a.m.matrix, a.m.n, a.m.seed);
  const std::vector<double> sigmas = a.sigmas.empty() ? default_sigma_grid() : parse_real_list(a.sigmas);
  QuadOptions opts;
  opts.mode = parse_mode(a.mode);
  opts.threads = a.threads;
  const ComplexMatrix ref = expm_pade_extended(mat);
  const auto rows = shift_sweep(mat, ref, sigmas, a.h, a.eps, opts);

  auto f = open_out(a.out);
  f << "sigma,rel_error_2norm\n";
  bool fresh = true;
  for (const auto& r : rows) {
    f << fmt17(r.sigma) << ',' << fmt17(r.rel_error) << '\n';
    append_metadata(a.out, {{"command", "shift-sweep"}, {"sigma", r.sigma}, {"rel_error", r.rel_error},
                            {"note", r.note}}, fresh);
    fresh = false;
  }
  json params = matrix_params(a.m);
  params.update({{"sigmas", sigmas}, {"h", a.h}, {"eps", a.eps}, {"mode", a.mode}, {"threads", a.threads},
                 {"oracle", "pade13-extended"}, {"out", a.out}});
  write_manifest(a.out, make_manifest("shift-sweep", params, matrix_seeds(a.m)));
  return kExitOk;
}

// --- autoquad -----------------------------------------------------------------

struct AutoquadArgs {
  MatrixArgs m;
  std::string out, eps_list = "1e-4,1e-6,1e-8,1e-10,1e-12", mode = "split";
  double sigma = kDefaultSigma, eta = 10.0, h1 = 0.4, h_min = 1e-3;
  unsigned threads = 1;
};

int cmd_autoquad(const AutoquadArgs& a) {
  const ComplexMatrix mat = resolve_matrix(a.m.matrix, a.m.n, a.m.seed);
  const std::vector<double> eps_list = parse_real_list(a.eps_list);
  QuadOptions opts;
  opts.mode = parse_mode(a.mode);
  opts.threads = a.threads;
  const ComplexMatrix ref = expm_pade_extended(mat);

  auto f = open_out(a.out);
  auto trace = open_out(a.out + ".trace.csv");
  f << "eps_target,eps_measured,final_h,rounds\n";
  trace << "eps_target,h,inv_h,err_measured,err_predicted\n";
  bool fresh = true;
  for (double eps : eps_list) {
    if (!(eps > 0.0)) throw InputError("--eps-list values must be positive");
    AutoQuadConfig cfg;
    cfg.eps = eps;
    cfg.sigma = a.sigma;
    cfg.eta = a.eta;
    cfg.h1 = a.h1;
    cfg.h_min = a.h_min;
    const AutoquadRun run = autoquad_run(mat, ref, cfg, opts, true);
    f << fmt17(eps) << ',' << fmt17(run.eps_measured) << ',' << fmt17(run.report.final_h) << ','
      << run.report.rounds.size() << '\n';
    for (const auto& t : run.trace)
      trace << fmt17(t.eps_target) << ',' << fmt17(t.h) << ',' << fmt17(1.0 / t.h) << ','
            << fmt17(t.err_measured) << ','
            << fmt17(t.err_predicted ? *t.err_predicted : std::nan("")) << '\n';
    append_metadata(a.out, {{"command", "autoquad"}, {"eps_target", eps}, {"eps_measured", run.eps_measured},
                            {"final_h", run.report.final_h}, {"outcome", to_string(run.report.outcome)},
                            {"rounds", run.report.rounds.size()}, {"assemblies", run.report.assemblies}},
                    fresh);
    fresh = false;
  }
  json params = matrix_params(a.m);
  params.update({{"eps_list", eps_list}, {"sigma", a.sigma}, {"eta", a.eta}, {"h1", a.h1}, {"h_min", a.h_min},
                 {"mode", a.mode}, {"threads", a.threads}, {"oracle", "pade13-extended"}, {"out", a.out}});
  write_manifest(a.out, make_manifest("autoquad", params, matrix_seeds(a.m)));
  return kExitOk;
}

// --- compare ------------------------------------------------------------------

struct CompareArgs {
  std::string out, c = "0.4,0.4", methods = "de,talbot", hs = "0.2,0.1,0.05,0.025,0.0125",
                   ms = "16,24,32,48,64,96,128,192,256,384,512", mode = "direct";
  double d = 0.01, sigma = kDefaultSigma, eps = 2.2e-16;
  std::size_t grid_n = 10;
  unsigned threads = 1;
};

int cmd_compare(const CompareArgs& a) {
  CompareConfig cfg;
  const auto c = parse_pair(a.c, "--c");
  cfg.spec = {a.grid_n, a.d, {c[0], c[1]}};
  cfg.run_de = cfg.run_talbot = false;
  std::stringstream ms(a.methods);
  for (std::string tok; std::getline(ms, tok, ',');) {
    if (tok == "de") cfg.run_de = true;
    else if (tok == "talbot") cfg.run_talbot = true;
    else throw InputError("unknown method '" + tok + "'");
  }
  cfg.hs = parse_real_list(a.hs);
  cfg.ms.clear();
  for (double m : parse_real_list(a.ms)) {
    if (m != std::floor(m) || m < 2) throw InputError("--m values must be integers >= 2");
    cfg.ms.push_back(static_cast<int>(m));
  }
  cfg.sigma = a.sigma;
  cfg.eps = a.eps;
  cfg.mode = parse_mode(a.mode);
  cfg.threads = a.threads;

  const ComplexMatrix mat = convection_diffusion(cfg.spec);
  const ComplexMatrix ref = expm_pade_extended(mat);
  const auto rows = compare_methods(cfg, mat, ref);

  auto f = open_out(a.out);
  f << "method,nodes,rel_error\n";
  bool fresh = true;
  for (const auto& r : rows) {
    f << r.method << ',' << r.nodes << ',' << fmt17(r.rel_error) << '\n';
    append_metadata(a.out, {{"command", "compare"}, {"method", r.method}, {"nodes", r.nodes},
                            {r.method == "de" ? "h" : "m", r.parameter}, {"rel_error", r.rel_error}},
                    fresh);
    fresh = false;
  }
  write_manifest(a.out, make_manifest("compare", {{"d", a.d}, {"c", c}, {"grid_n", a.grid_n},
                                                  {"methods", a.methods}, {"h", cfg.hs}, {"m", cfg.ms},
                                                  {"sigma", a.sigma}, {"eps", a.eps}, {"mode", a.mode},
                                                  {"threads", a.threads}, {"t", 1.0},
                                                  {"oracle", "pade13-extended"}, {"out", a.out}}));
  return kExitOk;
}

// --- gen-matrix ---------------------------------------------------------------

struct GenArgs {
  std::string kind, out, c = "0.2,0.2";
  std::size_t n = 50, grid_n = 20;
  std::uint64_t seed = 1;
  double kappa = 100.0, d = 0.01;
};

int cmd_gen_matrix(const GenArgs& a) {
  ComplexMatrix m;
  json params = {{"kind", a.kind}, {"out", a.out}};
  json seeds = json::array();
  bool coordinate = false;
  if (a.kind == "a1" || a.kind == "a2") {
    m = test_matrix({a.kind == "a1" ? 1 : 2, a.n, a.seed, true, a.kappa});
    params.update({{"n", a.n}, {"seed", a.seed}, {"kappa", a.kappa}});
    seeds.push_back(a.seed);
  } else if (a.kind == "randsvd") {
    m = randsvd({a.n, a.kappa, a.seed});
    params.update({{"n", a.n}, {"seed", a.seed}, {"kappa", a.kappa}});
    seeds.push_back(a.seed);
  } else {
    const auto c = parse_pair(a.c, "--c");
    m = convection_diffusion({a.grid_n, a.d, {c[0], c[1]}});
    params.update({{"grid_n", a.grid_n}, {"d", a.d}, {"c", c}});
    coordinate = true;
  }
  auto f = open_out(a.out);
  if (coordinate) write_matrix_market_coordinate(f, m);
  else write_matrix_market_array(f, m);
  write_manifest(a.out, make_manifest("gen-matrix", params, seeds));
  return kExitOk;
}

void add_matrix_opts(CLI::App* sub, MatrixArgs& m) {
  sub->add_option("--matrix", m.matrix, "a1, a2 or a Matrix Market file")->capture_default_str();
  sub->add_option("--n", m.n, "size of a1/a2")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--seed", m.seed, "seed of a1/a2")->capture_default_str();
}

CLI::Option* add_mode(CLI::App* sub, std::string& mode) {
  return sub->add_option("--mode", mode, "direct or split")
      ->capture_default_str()
      ->check(CLI::IsMember({"direct", "split"}));
}

}  // namespace

std::vector<double> parse_real_list(const std::string& text) {
  auto number = [&](const std::string& tok) {
    try {
      std::size_t used = 0;
      const double v = std::stod(tok, &used);
      if (used != tok.size() || !std::isfinite(v)) throw std::invalid_argument(tok);
      return v;
    } catch (const std::logic_error&) {
      throw InputError("bad number '" + tok + "' in '" + text + "'");
    }
  };
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    std::vector<double> parts;
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ':');) parts.push_back(number(tok));
    if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0])
      throw InputError("range '" + text + "' must be start:stop:step with step > 0");
    const long count = static_cast<long>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9));
    for (long i = 0; i <= count; ++i) out.push_back(parts[0] + static_cast<double>(i) * parts[2]);
    return out;
  }
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) out.push_back(number(tok));
  if (out.empty()) throw InputError("empty list");
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matrix exponential by double-exponential quadrature", "expmde"};
  // --h is the mesh size, so help is long-form only.
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  app.set_version_flag("--version", EXPMDE_VERSION);
  unsigned threads = 1;
  app.add_option("--threads", threads, "worker threads for node evaluation")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  ExpmArgs ex;
  auto* s_expm = app.add_subcommand("expm", "compute e^A for a Matrix Market file");
  s_expm->add_option("input", ex.input, "input matrix")->required();
  s_expm->add_option("--h", ex.h, "mesh size")->capture_default_str()->check(CLI::PositiveNumber);
  s_expm->add_option("--eps", ex.eps, "truncation / target tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  s_expm->add_option("--sigma", ex.sigma, "shift target, negative")->capture_default_str();
  add_mode(s_expm, ex.mode);
  s_expm->add_option("--variant", ex.variant, "DE transform, 1999 or 1991")
      ->capture_default_str()
      ->check(CLI::IsMember({"1999", "1991"}));
  s_expm->add_flag("--auto", ex.automatic, "choose h automatically");
  s_expm->add_option("--eta", ex.eta, "safety factor for --auto")->capture_default_str();
  s_expm->add_option("--h-min", ex.h_min, "smallest mesh for --auto")->capture_default_str();
  s_expm->add_option("--h1", ex.h1, "initial mesh for --auto")->capture_default_str();
  s_expm->add_flag("--check-left", ex.check_left, "check the left-tail hypothesis afterwards");
  s_expm->add_option("--out", ex.out, "output Matrix Market file")->required();

  ScalarMapArgs sm;
  auto* s_map = app.add_subcommand("scalar-map", "error of the scalar DE sum over a grid of z");
  s_map->add_option("--h", sm.hs, "mesh sizes")->capture_default_str();
  s_map->add_option("--re-range", sm.re_range, "lo,hi (default: both standard windows)");
  s_map->add_option("--im-range", sm.im_range, "lo,hi");
  s_map->add_option("--grid", sm.grid, "points along re,im")->capture_default_str();
  s_map->add_option("--eps", sm.eps, "interval tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  s_map->add_option("--sigma", sm.sigma, "sigma for the interval")->capture_default_str();
  s_map->add_option("--out", sm.out, "output CSV")->required();

  ShiftSweepArgs sw;
  auto* s_sweep = app.add_subcommand("shift-sweep", "error against the shift parameter");
  add_matrix_opts(s_sweep, sw.m);
  s_sweep->add_option("--sigmas", sw.sigmas, "list or start:stop:step (default -10:5:0.25)");
  s_sweep->add_option("--h", sw.h, "mesh size")->capture_default_str()->check(CLI::PositiveNumber);
  s_sweep->add_option("--eps", sw.eps, "interval tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  add_mode(s_sweep, sw.mode);
  s_sweep->add_option("--out", sw.out, "output CSV")->required();

  AutoquadArgs aq;
  auto* s_aq = app.add_subcommand("autoquad", "automatic mesh selection against tolerance");
  add_matrix_opts(s_aq, aq.m);
  s_aq->add_option("--eps-list", aq.eps_list, "target tolerances")->capture_default_str();
  s_aq->add_option("--sigma", aq.sigma, "shift target")->capture_default_str();
  s_aq->add_option("--eta", aq.eta, "safety factor")->capture_default_str();
  s_aq->add_option("--h1", aq.h1, "initial mesh")->capture_default_str();
  s_aq->add_option("--h-min", aq.h_min, "smallest mesh")->capture_default_str();
  add_mode(s_aq, aq.mode);
  s_aq->add_option("--out", aq.out, "output CSV (trace goes to <out>.trace.csv)")->required();

  CompareArgs cp;
  auto* s_cmp = app.add_subcommand("compare", "DE against Talbot on a convection-diffusion matrix");
  s_cmp->add_option("--d", cp.d, "diffusion")->capture_default_str()->check(CLI::PositiveNumber);
  s_cmp->add_option("--c", cp.c, "convection cx,cy")->capture_default_str();
  s_cmp->add_option("--grid-n", cp.grid_n, "interior points per axis")->capture_default_str()->check(CLI::Range(3, 1000));
  s_cmp->add_option("--methods", cp.methods, "de,talbot")->capture_default_str();
  s_cmp->add_option("--h", cp.hs, "DE mesh sizes")->capture_default_str();
  s_cmp->add_option("--m", cp.ms, "Talbot node counts")->capture_default_str();
  s_cmp->add_option("--sigma", cp.sigma, "DE shift target")->capture_default_str();
  s_cmp->add_option("--eps", cp.eps, "DE tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  add_mode(s_cmp, cp.mode);
  s_cmp->add_option("--out", cp.out, "output CSV")->required();

  GenArgs gen;
  auto* s_gen = app.add_subcommand("gen-matrix", "write a test matrix");
  s_gen->add_option("--kind", gen.kind, "a1, a2, convdiff or randsvd")
      ->required()
      ->check(CLI::IsMember({"a1", "a2", "convdiff", "randsvd"}));
  s_gen->add_option("--n", gen.n, "size")->capture_default_str()->check(CLI::Range(2, 100000));
  s_gen->add_option("--seed", gen.seed, "seed")->capture_default_str();
  s_gen->add_option("--kappa", gen.kappa, "condition number of Z")->capture_default_str();
  s_gen->add_option("--grid-n", gen.grid_n, "convdiff interior points per axis")->capture_default_str()->check(CLI::Range(3, 1000));
  s_gen->add_option("--d", gen.d, "convdiff diffusion")->capture_default_str()->check(CLI::PositiveNumber);
  s_gen->add_option("--c", gen.c, "convdiff convection cx,cy")->capture_default_str();
  s_gen->add_option("--out", gen.out, "output Matrix Market file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  ex.threads = sw.threads = aq.threads = cp.threads = threads;
  try {
    if (s_expm->parsed()) return cmd_expm(ex, out);
    if (s_map->parsed()) return cmd_scalar_map(sm);
    if (s_sweep->parsed()) return cmd_shift_sweep(sw);
    if (s_aq->parsed()) return cmd_autoquad(aq);
    if (s_cmp->parsed()) return cmd_compare(cp);
    if (s_gen->parsed()) return cmd_gen_matrix(gen);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitInput;
}

}  // namespace expmde::cli
