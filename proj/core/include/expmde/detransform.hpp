#pragma once

#include <array>

namespace expmde {

/// Change of variables x_h(t) for Fourier-type integrals. Ooura1991 is
/// t/(1 - exp(-α sinh t)) with α = 6; Ooura1999 is
/// t/(1 - exp(-2t - α(1 - e^{-t}) - β(e^t - 1))) with β = 1/4 and
/// α = β/sqrt(1 + log(1 + π/h)/(4h)). Both are scaled by π/h.
enum class DeVariant { Ooura1991, Ooura1999 };

/// Number of Taylor coefficients kept for the t ≈ 0 branch.
inline constexpr int kDeSeriesTerms = 14;

struct DEParams {
  double h = 0.0;
  DeVariant variant = DeVariant::Ooura1999;
  double alpha = 0.0;
  double beta = 0.0;
  /// Taylor coefficients of t/(1 - e^{v(t)}) about t = 0.
  std::array<double, kDeSeriesTerms> series{};
};

/// Below this |t| the series branch replaces the closed-form quotient.
inline constexpr double kDeSeriesRadius = 1e-2;

/// Throws InvalidArgument for h ≤ 0 or non-finite h.
DEParams make_params(double h, DeVariant variant = DeVariant::Ooura1999);

/// x_h(t); positive for every t.
double phi(const DEParams& p, double t);
/// x_h'(t).
double phi_deriv(const DEParams& p, double t);
/// u(t) = h·x_h(t)/(π t) - 1 = e^{v}/(1 - e^{v}), for t > 0.
double u_dev(const DEParams& p, double t);

/// The exponent v(t) and its derivative.
double de_exponent(const DEParams& p, double t);
double de_exponent_deriv(const DEParams& p, double t);

}  // namespace expmde
