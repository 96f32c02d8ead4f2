#pragma once

#include "expmde/densela.hpp"
#include "expmde/detransform.hpp"
#include "expmde/matrix.hpp"

namespace expmde {

/// Summation range [l, r] together with the tail estimates that justified it.
struct TruncationInterval {
  long l = -1;
  long r = 1;
  double left_bound = 0.0;
  double right_bound = 0.0;
  double epsilon = 0.0;

  long nodes() const noexcept { return r - l + 1; }
};

inline constexpr int kDefaultTailTerms = 50;
inline constexpr long kIntervalCap = 1'000'000;

/// (h/π) Σ_{k=l-terms}^{l-1} x_h'(kh).
double left_tail(const DEParams& p, long l, int terms = kDefaultTailTerms);

/// (4π(1+√2)/|σ|) Σ_{k=r+1}^{r+terms} k·u(kh). Throws InvalidArgument for σ ≥ 0.
double right_tail(const DEParams& p, long r, double sigma, int terms = kDefaultTailTerms);

/// Largest l and smallest r whose tail estimates are each ≤ ε/2, clamped so
/// that l ≤ -1 and r ≥ 1. Throws IntervalOverflow past ±10⁶.
TruncationInterval get_interval(const DEParams& p, double sigma, double eps,
                                int terms = kDefaultTailTerms);

/// Full truncation bound with the resolvent norms ‖(A ± i x_h(kh) I)⁻¹‖₂
/// estimated directly instead of through (1+√2)/|σ|.
double verify_prop1_bound(const DEParams& p, const ComplexMatrix& a, const TruncationInterval& iv,
                          int terms = kDefaultTailTerms);

/// Outcome of checking x_h(lh) ≤ 1/sqrt(2‖A⁻²‖₂), the left-tail hypothesis
/// of the bound, which get_interval never sees.
struct LeftConditionCheck {
  double x_left = 0.0;
  double threshold = 0.0;
  bool satisfied = false;
};

LeftConditionCheck check_left_condition(const DEParams& p, const ComplexMatrix& a,
                                        const TruncationInterval& iv);

}  // namespace expmde
