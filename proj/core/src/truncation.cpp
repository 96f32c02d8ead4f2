#include "expmde/truncation.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "expmde/errors.hpp"

namespace expmde {

namespace {

using std::numbers::pi;
constexpr double kCrouzeix = 1.0 + std::numbers::sqrt2;

void require_terms(int terms) {
  if (terms < 1) throw InvalidArgument("tail sums need at least one term");
}

}  // namespace

double left_tail(const DEParams& p, long l, int terms) {
  require_terms(terms);
  // Smallest terms first.
  double sum = 0.0;
  for (long k = l - terms; k <= l - 1; ++k) sum += phi_deriv(p, static_cast<double>(k) * p.h);
  return p.h / pi * sum;
}

double right_tail(const DEParams& p, long r, double sigma, int terms) {
  require_terms(terms);
  if (!(sigma < 0.0)) throw InvalidArgument("right_tail: sigma must be negative");
  double sum = 0.0;
  for (long k = r + terms; k >= r + 1; --k) {
    sum += static_cast<double>(k) * u_dev(p, static_cast<double>(k) * p.h);
  }
  return 4.0 * pi * kCrouzeix * sum / std::abs(sigma);
}

TruncationInterval get_interval(const DEParams& p, double sigma, double eps, int terms) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw InvalidTolerance("get_interval: tolerance must be positive");
  if (!(sigma < 0.0)) throw InvalidArgument("get_interval: sigma must be negative");
  const double half = eps / 2.0;

  TruncationInterval iv;
  iv.epsilon = eps;

  long l = 0;
  double lb = left_tail(p, l, terms);
  while (lb > half) {
    if (-(--l) > kIntervalCap) {
      throw IntervalOverflow("get_interval: left end passed -" + std::to_string(kIntervalCap) +
                             " for h=" + std::to_string(p.h));
    }
    lb = left_tail(p, l, terms);
  }
  if (l > -1) {
    l = -1;
    lb = left_tail(p, l, terms);
  }

  long r = 1;
  double rb = right_tail(p, r, sigma, terms);
  while (rb > half) {
    if (++r > kIntervalCap) {
      throw IntervalOverflow("get_interval: right end passed " + std::to_string(kIntervalCap) +
                             " for h=" + std::to_string(p.h));
    }
    rb = right_tail(p, r, sigma, terms);
  }

  iv.l = l;
  iv.r = r;
  iv.left_bound = lb;
  iv.right_bound = rb;
  return iv;
}

double verify_prop1_bound(const DEParams& p, const ComplexMatrix& a, const TruncationInterval& iv,
                          int terms) {
  if (!a.is_square()) throw InvalidArgument("verify_prop1_bound: matrix must be square");
  const double left = left_tail(p, iv.l, terms);
  const std::size_t n = a.rows();
  double right = 0.0;
  for (long k = iv.r + terms; k >= iv.r + 1; --k) {
    const double t = static_cast<double>(k) * p.h;
    const double weight = static_cast<double>(k) * u_dev(p, t);
    if (weight == 0.0) continue;
    const double x = phi(p, t);
    ComplexMatrix plus = a;
    plus.add_to_diagonal(cplx(0.0, x));
    ComplexMatrix minus = a;
    minus.add_to_diagonal(cplx(0.0, -x));
    const double norms = norm2(lu_solve(lu_factor(std::move(plus)), ComplexMatrix::identity(n))) +
                         norm2(lu_solve(lu_factor(std::move(minus)), ComplexMatrix::identity(n)));
    right += weight * norms;
  }
  return left + 2.0 * pi * right;
}

LeftConditionCheck check_left_condition(const DEParams& p, const ComplexMatrix& a,
                                        const TruncationInterval& iv) {
  const auto f = lu_factor(a);
  const auto inv_sq = lu_solve(f, lu_solve(f, ComplexMatrix::identity(a.rows())));
  LeftConditionCheck out;
  out.x_left = phi(p, static_cast<double>(iv.l) * p.h);
  out.threshold = 1.0 / std::sqrt(2.0 * norm2(inv_sq));
  out.satisfied = out.x_left <= out.threshold;
  return out;
}

}  // namespace expmde
