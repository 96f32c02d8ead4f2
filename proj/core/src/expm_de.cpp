#include "expmde/expm_de.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "expmde/densela.hpp"
#include "expmde/errors.hpp"
#include "ordered_sum.hpp"

namespace expmde {

namespace {

using std::numbers::pi;

// For k > 0, x = kπ(1 + u(kh)), so sin x = (-1)^k sin(kπ u). Evaluating it this
// way avoids the O(x·ulp) error of sin at large x near a multiple of π.
double node_sine(const DEParams& p, long k, double x) {
  if (k <= 0) return std::sin(x);
  const double s = std::sin(static_cast<double>(k) * pi * u_dev(p, static_cast<double>(k) * p.h));
  return k % 2 == 0 ? s : -s;
}

double node_weight(const DEParams& p, long k, double x) {
  const double t = static_cast<double>(k) * p.h;
  return p.h * phi_deriv(p, t) * node_sine(p, k, x) * (2.0 / pi) * x;
}

class TermEvaluator {
 public:
  TermEvaluator(const ComplexMatrix& a, const DEParams& p, EvalMode mode)
      : a_(a), p_(p), mode_(mode), eye_(ComplexMatrix::identity(a.rows())) {
    if (mode_ == EvalMode::Direct) a_sq_ = a * a;
  }

  ComplexMatrix operator()(long k) const {
    const double t = static_cast<double>(k) * p_.h;
    const double x = phi(p_, t);
    const double w = node_weight(p_, k, x);
    if (w == 0.0) return ComplexMatrix(a_.rows(), a_.cols());
    try {
      ComplexMatrix res = mode_ == EvalMode::Direct ? direct(x) : split(x);
      res *= w;
      return res;
    } catch (const SingularMatrix& e) {
      throw SingularMatrix(std::string("resolvent at node k=") + std::to_string(k) + ": " + e.what(), k);
    }
  }

 private:
  ComplexMatrix direct(double x) const {
    ComplexMatrix m = a_sq_;
    m.add_to_diagonal(x * x);
    return lu_solve(lu_factor(std::move(m)), eye_);
  }

  ComplexMatrix split(double x) const {
    ComplexMatrix plus = a_;
    plus.add_to_diagonal(cplx(0.0, x));
    ComplexMatrix minus = a_;
    minus.add_to_diagonal(cplx(0.0, -x));
    ComplexMatrix r = lu_solve(lu_factor(std::move(plus)), eye_);
    r -= lu_solve(lu_factor(std::move(minus)), eye_);
    r *= cplx(0.0, 1.0 / (2.0 * x));
    return r;
  }

  const ComplexMatrix& a_;
  const DEParams& p_;
  EvalMode mode_;
  ComplexMatrix eye_;
  ComplexMatrix a_sq_;
};

void require_square(const ComplexMatrix& a) {
  if (!a.is_square() || a.empty()) throw InvalidArgument("matrix must be square and non-empty");
}

}  // namespace

ComplexMatrix quad_term(const DEParams& p, long k, const ComplexMatrix& a, EvalMode mode) {
  require_square(a);
  return TermEvaluator(a, p, mode)(k);
}

ComplexMatrix expm_de_core(const ComplexMatrix& a_shifted, const DEParams& p,
                           const TruncationInterval& iv, EvalMode mode, unsigned threads) {
  require_square(a_shifted);
  const TermEvaluator term(a_shifted, p, mode);
  return detail::ordered_sum(iv.l, iv.r, threads, a_shifted.rows(), a_shifted.cols(), term);
}

ComplexMatrix shift_to(const ComplexMatrix& a, cplx lambda_right, double sigma) {
  ComplexMatrix out = a;
  out.add_to_diagonal(sigma - lambda_right);
  return out;
}

QuadResult expm_de_with_interval(const ComplexMatrix& a, const DEParams& p, double sigma,
                                 const TruncationInterval& iv, const QuadOptions& opts) {
  require_square(a);
  QuadResult res;
  res.lambda_right = rightmost_eigenvalue(a);
  res.shift_applied = res.lambda_right - sigma;
  res.params = p;
  res.interval = iv;
  res.mode = opts.mode;
  res.nodes_evaluated = iv.nodes();

  const ComplexMatrix shifted = shift_to(a, res.lambda_right, sigma);
  res.X = expm_de_core(shifted, p, iv, opts.mode, opts.threads);

  if (opts.check_left_condition) {
    res.left_condition = check_left_condition(p, shifted, iv);
    if (!res.left_condition->satisfied) {
      res.warnings.push_back("x_h(lh) = " + std::to_string(res.left_condition->x_left) +
                             " exceeds 1/sqrt(2|A^-2|) = " +
                             std::to_string(res.left_condition->threshold));
    }
  }

  const cplx scale = std::exp(res.shift_applied);
  if (std::isfinite(scale.real()) && std::isfinite(scale.imag())) {
    res.X *= scale;
  } else {
    res.scaled = false;
    res.warnings.push_back("exp(lambda_right - sigma) overflows; X holds the unscaled result");
  }
  return res;
}

QuadResult expm_de(const ComplexMatrix& a, double h, double eps, double sigma,
                   const QuadOptions& opts) {
  require_square(a);
  if (!(sigma < 0.0)) throw InvalidArgument("expm_de: sigma must be negative");
  const DEParams p = make_params(h, opts.variant);
  const TruncationInterval iv = get_interval(p, sigma, eps, opts.tail_terms);
  return expm_de_with_interval(a, p, sigma, iv, opts);
}

cplx expm_de_scalar(cplx z, const DEParams& p, const TruncationInterval& iv) {
  detail::CompensatedSum acc(1, 1);
  for (long k = iv.l; k <= iv.r; ++k) {
    const double t = static_cast<double>(k) * p.h;
    const double x = phi(p, t);
    const double w = node_weight(p, k, x);
    if (w == 0.0) continue;
    acc.add(w / (x * x + z * z));
  }
  return acc.scalar();
}

}  // namespace expmde
