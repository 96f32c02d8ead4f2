#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "doctest.h"
#include "expmde/densela.hpp"
#include "expmde/errors.hpp"
#include "expmde/matgen.hpp"
#include "expmde/random.hpp"
#include "oracles.hpp"

using namespace expmde;

TEST_CASE("SplitMix64 reference stream") {
  // Published SplitMix64 outputs for seed 0.
  SplitMix64 g(0);
  CHECK(g.next() == 0xE220A8397B1DCDAFULL);
  CHECK(g.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(g.next() == 0x06C45D188009454FULL);

  SplitMix64 u(42);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform();
    CHECK(x > 0.0);
    CHECK(x < 1.0);
  }
  CHECK(derive_seed(1, 1) != derive_seed(1, 2));
  CHECK(derive_seed(1, 1) != derive_seed(2, 1));
}

TEST_CASE("normal draws have unit variance") {
  SplitMix64 g(123);
  double s = 0, s2 = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double x = g.normal();
    s += x;
    s2 += x * x;
  }
  CHECK(std::abs(s / n) < 0.01);
  CHECK(std::abs(s2 / n - 1.0) < 0.02);
}

TEST_CASE("randsvd") {
  const auto u = randsvd({12, 1.0, 4});
  CHECK(oracle::fro_diff(u.adjoint() * u, ComplexMatrix::identity(12)) <= 1e-13);

  const auto z = randsvd({50, 100.0, 1});
  const auto sv = oracle::singular_values(z);
  const double kappa = sv.front() / sv.back();
  CHECK(kappa >= 99.0);
  CHECK(kappa <= 101.0);
  CHECK(sv.front() == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(randsvd({20, 10.0, 7}) == randsvd({20, 10.0, 7}));
  CHECK_FALSE(randsvd({20, 10.0, 7}) == randsvd({20, 10.0, 8}));
  CHECK_THROWS_AS(randsvd({5, 0.5, 1}), InvalidArgument);
}

TEST_CASE("test matrix diagonals") {
  TestMatrixSpec s1;
  s1.imag_noise = false;
  const auto p1 = test_matrix_parts(s1);
  CHECK(p1.d.front() == cplx(0.0));
  CHECK(p1.d.back().real() == doctest::Approx(-99.0).epsilon(1e-14));

  TestMatrixSpec s2 = s1;
  s2.k = 2;
  const auto p2 = test_matrix_parts(s2);
  CHECK(p2.d.back().real() == doctest::Approx(-9999.0).epsilon(1e-14));

  const auto noisy = test_matrix_parts({1, 50, 1});
  double max_im = 0;
  for (const auto& d : noisy.d) max_im = std::max(max_im, std::abs(d.imag()));
  CHECK(max_im > 0.0);
  CHECK(max_im < 0.25);
  for (std::size_t i = 0; i < 50; ++i) CHECK(noisy.d[i].real() == p1.d[i].real());
}

TEST_CASE("test matrix is Z D Z^-1 and reproducible") {
  const auto parts = test_matrix_parts({1, 30, 5});
  const auto a = test_matrix({1, 30, 5});
  const auto want = oracle::similarity(parts.z, parts.d);
  CHECK(oracle::fro_diff(a, want) <= 1e-12 * oracle::fro(want));
  CHECK(a == test_matrix({1, 30, 5}));

  const auto s = eigenvalues(a);
  for (const auto& d : parts.d) {
    double best = 1e300;
    for (const auto& l : s.eigenvalues) best = std::min(best, std::abs(l - d));
    CHECK(best <= 1e-8);
  }
  CHECK(rightmost_eigenvalue(a).real() < 1.0);
}

TEST_CASE("convection-diffusion stencil on a 3x3 grid") {
  const double d = 0.01, cx = 0.2, cy = 0.3;
  const auto a = convection_diffusion({3, d, {cx, cy}});
  REQUIRE(a.rows() == 9);
  const double h = 0.25;
  const double diag = -4 * d / (h * h), off = d / (h * h);
  // Centre point p = 1 + 1·3 = 4.
  CHECK(a(4, 4).real() == doctest::Approx(diag));
  CHECK(a(4, 5).real() == doctest::Approx(off - cx / (2 * h)));
  CHECK(a(4, 3).real() == doctest::Approx(off + cx / (2 * h)));
  CHECK(a(4, 7).real() == doctest::Approx(off - cy / (2 * h)));
  CHECK(a(4, 1).real() == doctest::Approx(off + cy / (2 * h)));
  // Row ends do not wrap around.
  CHECK(a(2, 3) == cplx(0.0));
  CHECK(a(3, 2) == cplx(0.0));
  int nonzeros = 0;
  for (const auto& z : a.data()) nonzeros += z != cplx(0.0);
  CHECK(nonzeros == 9 + 2 * 12);
  for (const auto& z : a.data()) CHECK(z.imag() == 0.0);
}

TEST_CASE("pure diffusion has the Dirichlet Laplacian spectrum") {
  const std::size_t n = 4;
  const double d = 0.5;
  const auto a = convection_diffusion({n, d, {0.0, 0.0}});
  CHECK(a == a.transpose());
  const double h = 1.0 / (n + 1);
  std::vector<double> want;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      const double si = std::sin(i * std::numbers::pi * h / 2), sj = std::sin(j * M_PI * h / 2);
      want.push_back(-4 * d * (si * si + sj * sj) / (h * h));
    }
  std::sort(want.begin(), want.end(), std::greater<>());
  const auto s = eigenvalues(a);
  for (std::size_t i = 0; i < want.size(); ++i) {
    CHECK(s.eigenvalues[i].real() == doctest::Approx(want[i]).epsilon(1e-12));
    CHECK(std::abs(s.eigenvalues[i].imag()) <= 1e-10);
  }
}

TEST_CASE("convection makes the spectrum non-real but keeps it stable") {
  const auto a = convection_diffusion({20, 0.001, {0.2, 0.2}});
  const auto s = eigenvalues(a);
  CHECK(s.eigenvalues.front().real() < 0.0);
  double max_im = 0;
  for (const auto& l : s.eigenvalues) max_im = std::max(max_im, std::abs(l.imag()));
  CHECK(max_im > 1.0);
  CHECK_THROWS_AS(convection_diffusion({2, 0.1, {0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(convection_diffusion({5, 0.0, {0, 0}}), InvalidArgument);
}
