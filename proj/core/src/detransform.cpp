#include "expmde/detransform.hpp"

#include <cmath>
#include <numbers>

#include "expmde/errors.hpp"

namespace expmde {

namespace {

using std::numbers::pi;

// Below this exponent e^{v} is zero in double precision and x_h(t) = πt/h
// exactly.
constexpr double kUnderflowExponent = -745.0;

// Taylor coefficients of t/(1 - e^{v(t)}) from those of v (v(0) = 0):
// E = exp(V) by the recurrence k E_k = Σ j V_j E_{k-j}; (1 - E)/t = Q;
// S = 1/Q by series division.
std::array<double, kDeSeriesTerms> series_coefficients(DeVariant variant, double alpha,
                                                        double beta) {
  constexpr int K = kDeSeriesTerms;
  std::array<double, K + 2> v{};
  double fact = 1.0;
  for (int j = 1; j <= K + 1; ++j) {
    fact *= j;
    if (variant == DeVariant::Ooura1999) {
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      v[j] = (j == 1 ? -2.0 : 0.0) + alpha * sign / fact - beta / fact;
    } else {
      v[j] = (j % 2 == 1) ? -alpha / fact : 0.0;
    }
  }
  std::array<double, K + 2> e{};
  e[0] = 1.0;
  for (int k = 1; k <= K + 1; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += j * v[j] * e[k - j];
    e[k] = s / k;
  }
  std::array<double, K> q{};
  for (int k = 0; k < K; ++k) q[k] = -e[k + 1];
  std::array<double, K> out{};
  out[0] = 1.0 / q[0];
  for (int k = 1; k < K; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += q[j] * out[k - j];
    out[k] = -s / q[0];
  }
  return out;
}

double series_value(const DEParams& p, double t) {
  double acc = 0.0;
  for (int j = kDeSeriesTerms - 1; j >= 0; --j) acc = acc * t + p.series[j];
  return acc;
}

double series_deriv(const DEParams& p, double t) {
  double acc = 0.0;
  for (int j = kDeSeriesTerms - 1; j >= 1; --j) acc = acc * t + j * p.series[j];
  return acc;
}

// x_h(0) and x_h'(0) in closed form. For Ooura1999 these are the known
// limits π/(h(α+β+2)) and (π/2h)(α²+2αβ+5α+β²+3β+4)/(α+β+2)²; for Ooura1991
// the series t/(1 - e^{-α sinh t}) = 1/α + t/2 + O(t²) gives π/(αh), π/(2h).
double phi_at_zero(const DEParams& p) {
  if (p.variant == DeVariant::Ooura1991) return pi / (p.alpha * p.h);
  return pi / (p.h * (p.alpha + p.beta + 2.0));
}

double phi_deriv_at_zero(const DEParams& p) {
  if (p.variant == DeVariant::Ooura1991) return pi / (2.0 * p.h);
  const double a = p.alpha;
  const double b = p.beta;
  const double num = a * a + 2 * a * b + 5 * a + b * b + 3 * b + 4;
  const double den = a * a + 2 * a * b + 4 * a + b * b + 4 * b + 4;
  return pi / (2.0 * p.h) * num / den;
}

}  // namespace

DEParams make_params(double h, DeVariant variant) {
  if (!std::isfinite(h) || h <= 0.0) throw InvalidArgument("make_params: mesh size must be positive and finite");
  DEParams p;
  p.h = h;
  p.variant = variant;
  if (variant == DeVariant::Ooura1991) {
    p.alpha = 6.0;
    p.beta = 0.0;
  } else {
    p.beta = 0.25;
    p.alpha = p.beta / std::sqrt(1.0 + std::log1p(pi / h) / (4.0 * h));
  }
  p.series = series_coefficients(variant, p.alpha, p.beta);
  return p;
}

double de_exponent(const DEParams& p, double t) {
  if (p.variant == DeVariant::Ooura1991) return -p.alpha * std::sinh(t);
  return -2.0 * t + p.alpha * std::expm1(-t) - p.beta * std::expm1(t);
}

double de_exponent_deriv(const DEParams& p, double t) {
  if (p.variant == DeVariant::Ooura1991) return -p.alpha * std::cosh(t);
  return -2.0 - p.alpha * std::exp(-t) - p.beta * std::exp(t);
}

double phi(const DEParams& p, double t) {
  if (t == 0.0) return phi_at_zero(p);
  const double scale = pi / p.h;
  if (std::abs(t) < kDeSeriesRadius) return scale * series_value(p, t);
  const double v = de_exponent(p, t);
  if (v < kUnderflowExponent) return scale * t;
  if (v <= 0.0) return scale * t / -std::expm1(v);
  // t < 0: divide through by e^{v} so nothing overflows.
  const double q = std::exp(-v);
  return scale * (-t * q) / -std::expm1(-v);
}

double phi_deriv(const DEParams& p, double t) {
  if (t == 0.0) return phi_deriv_at_zero(p);
  const double scale = pi / p.h;
  if (std::abs(t) < kDeSeriesRadius) return scale * series_deriv(p, t);
  const double v = de_exponent(p, t);
  if (v < kUnderflowExponent) return scale;
  if (v <= 0.0) {
    const double e = std::exp(v);
    const double em1 = std::expm1(v);
    return scale * (-em1 + t * de_exponent_deriv(p, t) * e) / (em1 * em1);
  }
  const double q = std::exp(-v);
  if (q == 0.0) return 0.0;
  const double qm1 = std::expm1(-v);
  return scale * q * (qm1 + t * de_exponent_deriv(p, t)) / (qm1 * qm1);
}

double u_dev(const DEParams& p, double t) {
  if (!(t > 0.0)) throw InvalidArgument("u_dev: t must be positive");
  const double v = de_exponent(p, t);
  if (v < kUnderflowExponent) return std::exp(v);
  return std::exp(v) / -std::expm1(v);
}

}  // namespace expmde
