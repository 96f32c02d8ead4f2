#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "expmde/errors.hpp"
#include "expmde/expm_de.hpp"
#include "expmde/matgen.hpp"
#include "expmde/truncation.hpp"
#include "oracles.hpp"

using namespace expmde;
using std::numbers::pi;

namespace {

// First-crossing scans driven by the long double tails.
std::pair<long, long> oracle_interval(const DEParams& p, double sigma, double eps, int terms) {
  long l = 0;
  while (oracle::left_tail(p, l, terms) > eps / 2) --l;
  l = std::min(l, -1L);
  long r = 1;
  while (oracle::right_tail(p, r, sigma, terms) > eps / 2) ++r;
  return {l, r};
}

}  // namespace

TEST_CASE("left tail") {
  const auto p = make_params(0.05);
  CHECK(left_tail(p, -200) == 0.0);
  const double lt40 = left_tail(p, -40);
  CHECK(std::abs(lt40 - static_cast<double>(oracle::left_tail(p, -40, 50))) <= 1e-14 * lt40);
  // Far enough left the first term dominates and extra terms do not matter.
  const double lt100 = left_tail(p, -100);
  CHECK(std::abs(lt100 - static_cast<double>(oracle::left_tail(p, -100, 500))) <= 1e-14 * lt100);
  double prev = 1e300;
  for (long l = 0; l >= -150; --l) {
    const double v = left_tail(p, l);
    CHECK(v <= prev);
    prev = v;
  }
  CHECK_THROWS_AS(left_tail(p, -1, 0), InvalidArgument);
}

TEST_CASE("right tail") {
  const auto p = make_params(0.05);
  CHECK(right_tail(p, 400, -2.5) == 0.0);
  CHECK(std::abs(right_tail(p, 60, -2.5) - static_cast<double>(oracle::right_tail(p, 60, -2.5, 500))) <= 1e-16);
  CHECK(right_tail(p, 60, -5.0) == right_tail(p, 60, -2.5) / 2);
  CHECK_THROWS_AS(right_tail(p, 10, 0.0), InvalidArgument);
  CHECK_THROWS_AS(right_tail(p, 10, 1.0), InvalidArgument);
  double prev = 1e300;
  for (long r = 1; r <= 150; ++r) {
    const double v = right_tail(p, r, -2.5);
    CHECK(v <= prev);
    prev = v;
  }
}

TEST_CASE("get_interval golden value") {
  const auto p = make_params(0.1);
  const auto iv = get_interval(p, -2.5, 2.2e-16);
  CHECK(iv.l == -59);
  CHECK(iv.r == 48);
  CHECK(iv.nodes() == 108);
  CHECK(iv.left_bound <= 1.1e-16);
  CHECK(iv.right_bound <= 1.1e-16);
  const auto [l, r] = oracle_interval(p, -2.5, 2.2e-16, 50);
  CHECK(iv.l == l);
  CHECK(iv.r == r);
}

TEST_CASE("get_interval agrees with the long double scan and is term-count stable") {
  for (double h : {0.2, 0.1, 0.05})
    for (double eps : {1e-8, 1e-12, 2.2e-16})
      for (double sigma : {-1.0, -2.5, -5.0}) {
        const auto p = make_params(h);
        const auto iv = get_interval(p, sigma, eps);
        const auto [l, r] = oracle_interval(p, sigma, eps, 50);
        CHECK(iv.l == l);
        CHECK(iv.r == r);
        const auto wide = get_interval(p, sigma, eps, 500);
        CHECK(wide.l == iv.l);
        CHECK(wide.r == iv.r);
        CHECK(iv.l < iv.r);
        CHECK(iv.left_bound <= eps / 2);
        CHECK(iv.right_bound <= eps / 2);
      }
}

TEST_CASE("get_interval monotone in the tolerance and clamped") {
  const auto p = make_params(0.1);
  const auto loose = get_interval(p, -2.5, 1e-8);
  const auto tight = get_interval(p, -2.5, 1e-16);
  CHECK(loose.l >= tight.l);
  CHECK(loose.r <= tight.r);

  const auto huge = get_interval(p, -2.5, 1e10);
  CHECK(huge.l == -1);
  CHECK(huge.r == 1);
}

TEST_CASE("get_interval input errors") {
  const auto p = make_params(0.1);
  CHECK_THROWS_AS(get_interval(p, -2.5, 0.0), InvalidTolerance);
  CHECK_THROWS_AS(get_interval(p, -2.5, -1.0), InvalidTolerance);
  CHECK_THROWS_AS(get_interval(p, -2.5, std::numeric_limits<double>::infinity()), InvalidTolerance);
  CHECK_THROWS_AS(get_interval(p, 0.0, 1e-8), InvalidArgument);
  CHECK_THROWS_AS(get_interval(make_params(5e-6), -2.5, 1e-300), IntervalOverflow);
}

TEST_CASE("full bound with resolvent norms") {
  const auto p = make_params(0.1);
  const auto generous = get_interval(p, -1.0, 1e-18);
  CHECK(verify_prop1_bound(p, ComplexMatrix::identity(3) * -1.0, generous) < 1e-15);

  const auto iv = get_interval(p, -1.0, 1e-6);
  const double got = verify_prop1_bound(p, ComplexMatrix::identity(1) * -1.0, iv);
  double right = 0.0;
  for (long k = iv.r + 50; k >= iv.r + 1; --k) {
    const double t = k * p.h;
    const double x = phi(p, t);
    right += k * u_dev(p, t) * 2.0 / std::sqrt(1.0 + x * x);
  }
  const double want = left_tail(p, iv.l) + 2 * pi * right;
  CHECK(got == doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("truncated terms stay below the tolerance for shifted diagonal matrices") {
  TestMatrixSpec spec;
  spec.n = 12;
  const auto parts = test_matrix_parts(spec);
  const double sigma = -2.5;
  auto d = parts.d;
  for (auto& x : d) x += sigma;  // rightmost real part 0 moves to σ
  const auto a = ComplexMatrix::diagonal(d);
  for (double h : {0.2, 0.1}) {
    const auto p = make_params(h);
    for (double eps : {1e-8, 1e-12}) {
      const auto iv = get_interval(p, sigma, eps);
      TruncationInterval left{iv.l - 200, iv.l - 1};
      TruncationInterval right{iv.r + 1, iv.r + 200};
      const auto tails = expm_de_core(a, p, left, EvalMode::Direct) + expm_de_core(a, p, right, EvalMode::Direct);
      CHECK(oracle::singular_values(tails).front() <= eps);
    }
  }
}

TEST_CASE("left-end hypothesis holds on the test matrices") {
  for (int k : {1, 2}) {
    const auto a = test_matrix({k, 50, 1});
    const cplx lr = rightmost_eigenvalue(a);
    const auto shifted = shift_to(a, lr, -2.5);
    for (double h : {0.2, 0.1, 0.05}) {
      const auto p = make_params(h);
      const auto iv = get_interval(p, -2.5, 2.2e-16);
      const auto chk = check_left_condition(p, shifted, iv);
      CHECK(chk.satisfied);
      CHECK(chk.x_left > 0.0);
    }
  }
}
