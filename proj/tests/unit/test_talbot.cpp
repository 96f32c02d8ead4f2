#include <cmath>
#include <numbers>

#include "doctest.h"
#include "expmde/errors.hpp"
#include "expmde/matgen.hpp"
#include "expmde/reference.hpp"
#include "expmde/talbot.hpp"
#include "oracles.hpp"

using namespace expmde;

TEST_CASE("contour shape") {
  const TalbotParams p;
  const double m = p.m;
  // Real-axis crossing z(0) = m(μ̃/α̃ - σ̃).
  CHECK(talbot_node(p, 0.0).real() == doctest::Approx(m * (p.mu_t / p.alpha_t - p.sigma_t)));
  CHECK(talbot_node(p, 0.0).imag() == 0.0);
  for (double th : {0.3, 1.0, 2.0, 3.0}) {
    CHECK(talbot_node(p, -th) == std::conj(talbot_node(p, th)));
    const double d = 1e-6;
    const cplx fd = (talbot_node(p, th + d) - talbot_node(p, th - d)) / (2 * d);
    CHECK(std::abs(fd - talbot_node_deriv(p, th)) <= 1e-6 * std::abs(fd));
  }
  // The contour bends back into the left half-plane.
  CHECK(talbot_node(p, 3.1).real() < talbot_node(p, 2.0).real());
  CHECK(talbot_node(p, 2.0).real() < talbot_node(p, 0.0).real());
  CHECK(talbot_node(p, 3.1).real() < 0.0);
}

TEST_CASE("scalar exponential") {
  TalbotParams p;
  p.m = 32;
  const auto x = expm_talbot(ComplexMatrix::identity(1) * -1.0, p);
  CHECK(std::abs(x(0, 0) - std::exp(-1.0)) <= 1e-10);
  CHECK(x(0, 0).imag() == 0.0);
}

TEST_CASE("diagonal matrix with spread spectrum") {
  std::vector<cplx> d;
  for (int i = 1; i <= 100; ++i) d.push_back(-static_cast<double>(i));
  TalbotParams p;
  p.m = 64;
  const auto x = expm_talbot(ComplexMatrix::diagonal(d), p);
  double worst = 0;
  for (std::size_t i = 0; i < d.size(); ++i) worst = std::max(worst, std::abs(x(i, i) - std::exp(d[i])));
  CHECK(worst <= 1e-8);
}

TEST_CASE("real input takes the half-contour path") {
  const auto a = convection_diffusion({5, 0.05, {0.3, 0.1}});
  TalbotParams p;
  p.m = 48;
  const auto x = expm_talbot(a, p);
  for (const auto& z : x.data()) CHECK(z.imag() == 0.0);

  // A complex entry with zero real effect forces the general path.
  auto ac = a;
  ac(0, 0) += cplx(0.0, 1e-300);
  const auto xc = expm_talbot(ac, p);
  CHECK(oracle::fro_diff(x, xc) <= 1e-12 * oracle::fro(x));

  const auto ref = expm_pade_extended(a);
  CHECK(oracle::fro_diff(x, ref) <= 1e-9 * oracle::fro(ref));
}

TEST_CASE("error decays geometrically in m") {
  const auto a = convection_diffusion({6, 0.02, {0.2, 0.2}});
  const auto ref = expm_pade_extended(a);
  double prev = 1e300;
  for (int m : {8, 16, 24, 32}) {
    TalbotParams p;
    p.m = m;
    const double e = oracle::fro_diff(expm_talbot(a, p), ref) / oracle::fro(ref);
    CHECK(e < prev);
    prev = e;
  }
  CHECK(prev <= 1e-8);
}

TEST_CASE("threads do not change the result") {
  const auto a = test_matrix({1, 12, 3});
  TalbotParams p;
  p.m = 32;
  CHECK(expm_talbot(a, p, 1) == expm_talbot(a, p, 4));
}

TEST_CASE("argument validation") {
  const auto a = ComplexMatrix::identity(2) * -1.0;
  TalbotParams p;
  p.m = 31;
  CHECK_THROWS_AS(expm_talbot(a, p), InvalidArgument);
  p.m = 0;
  CHECK_THROWS_AS(expm_talbot(a, p), InvalidArgument);
  p = {};
  p.alpha_t = 1.0;
  CHECK_THROWS_AS(expm_talbot(a, p), InvalidArgument);
  p = {};
  p.mu_t = 0.0;
  CHECK_THROWS_AS(expm_talbot(a, p), InvalidArgument);
  CHECK_THROWS_AS(expm_talbot(ComplexMatrix(2, 3), TalbotParams{}), InvalidArgument);
}
