// Eigenvalues of a general complex matrix: Householder reduction to upper
// Hessenberg form, then single-shift complex QR on the active window with
// Wilkinson shifts. Only eigenvalues are needed, so transformations are not
// applied outside the window and no Schur vectors are accumulated.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "expmde/densela.hpp"
#include "expmde/errors.hpp"

namespace expmde {

namespace {

double abs1(cplx z) { return std::abs(z.real()) + std::abs(z.imag()); }

void reduce_to_hessenberg(ComplexMatrix& h) {
  const std::size_t n = h.rows();
  std::vector<cplx> v;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    v.assign(n - k - 1, cplx{});
    double xnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      v[i - k - 1] = h(i, k);
      xnorm2 += std::norm(h(i, k));
    }
    const double xnorm = std::sqrt(xnorm2);
    if (xnorm == 0.0) continue;
    const cplx phase = std::abs(v[0]) == 0.0 ? cplx(1.0) : v[0] / std::abs(v[0]);
    v[0] += phase * xnorm;
    double vn2 = 0.0;
    for (const auto& z : v) vn2 += std::norm(z);
    const double vn = std::sqrt(vn2);
    for (auto& z : v) z /= vn;

    // Left: rows k+1.., H -= 2 v (vᴴ H)
    for (std::size_t j = k; j < n; ++j) {
      cplx s{};
      for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i - k - 1]) * h(i, j);
      s *= 2.0;
      for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= v[i - k - 1] * s;
    }
    // Right: columns k+1.., H -= 2 (H v) vᴴ
    for (std::size_t i = 0; i < n; ++i) {
      cplx s{};
      for (std::size_t j = k + 1; j < n; ++j) s += h(i, j) * v[j - k - 1];
      s *= 2.0;
      for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= s * std::conj(v[j - k - 1]);
    }
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }
}

// Eigenvalue of [[a, b], [c, d]] closest to d.
cplx wilkinson_shift(cplx a, cplx b, cplx c, cplx d) {
  const cplx half_diff = 0.5 * (a - d);
  const cplx disc = std::sqrt(half_diff * half_diff + b * c);
  const cplx mid = 0.5 * (a + d);
  const cplx e1 = mid + disc;
  const cplx e2 = mid - disc;
  return std::abs(e1 - d) < std::abs(e2 - d) ? e1 : e2;
}

struct Givens {
  double c;
  cplx s;
};

// G·[a; b] = [r; 0] with G = [[c, s], [-conj(s), c]].
Givens make_givens(cplx a, cplx b) {
  const double aa = std::abs(a);
  const double bb = std::abs(b);
  if (bb == 0.0) return {1.0, 0.0};
  if (aa == 0.0) return {0.0, std::conj(b) / bb};
  const double r = std::hypot(aa, bb);
  return {aa / r, (a / aa) * std::conj(b) / r};
}

// One explicit shifted QR step on the window [lo, hi].
void qr_step(ComplexMatrix& h, std::size_t lo, std::size_t hi, cplx mu,
             std::vector<Givens>& rot) {
  for (std::size_t i = lo; i <= hi; ++i) h(i, i) -= mu;
  rot.resize(hi - lo);
  for (std::size_t k = lo; k < hi; ++k) {
    const Givens g = make_givens(h(k, k), h(k + 1, k));
    rot[k - lo] = g;
    for (std::size_t j = k; j <= hi; ++j) {
      const cplx x = h(k, j);
      const cplx y = h(k + 1, j);
      h(k, j) = g.c * x + g.s * y;
      h(k + 1, j) = -std::conj(g.s) * x + g.c * y;
    }
  }
  for (std::size_t k = lo; k < hi; ++k) {
    const Givens g = rot[k - lo];
    const std::size_t last = std::min(k + 1, hi);
    for (std::size_t i = lo; i <= last; ++i) {
      const cplx x = h(i, k);
      const cplx y = h(i, k + 1);
      h(i, k) = x * g.c + y * std::conj(g.s);
      h(i, k + 1) = -x * g.s + y * g.c;
    }
  }
  for (std::size_t i = lo; i <= hi; ++i) h(i, i) += mu;
}

}  // namespace

Spectrum eigenvalues(const ComplexMatrix& a, const EigenOptions& opts) {
  if (!a.is_square() || a.empty()) throw InvalidArgument("eigenvalues: matrix must be square and non-empty");
  if (!a.all_finite()) throw InvalidArgument("eigenvalues: non-finite entry");
  const std::size_t n = a.rows();
  ComplexMatrix h = a;
  reduce_to_hessenberg(h);

  std::vector<cplx> eig(n);
  const double hnorm = norm_fro(h);
  const long cap = static_cast<long>(opts.sweeps_per_dim) * static_cast<long>(n);
  long sweeps = 0;
  std::vector<Givens> rot;

  std::size_t hi = n - 1;
  int its_since_deflation = 0;
  while (true) {
    // Locate the start of the active unreduced block ending at hi.
    std::size_t lo = hi;
    while (lo > 0) {
      double scale = abs1(h(lo, lo)) + abs1(h(lo - 1, lo - 1));
      if (scale == 0.0) scale = hnorm;
      if (abs1(h(lo, lo - 1)) <= opts.deflation_tol * scale) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      eig[hi] = h(hi, hi);
      its_since_deflation = 0;
      if (hi == 0) break;
      --hi;
      continue;
    }
    if (++sweeps > cap) {
      throw NoConvergence("eigenvalues: QR iteration exceeded " + std::to_string(cap) +
                          " sweeps with " + std::to_string(hi + 1) + " eigenvalues undeflated");
    }
    ++its_since_deflation;
    cplx mu;
    if (its_since_deflation % 10 == 0) {
      // Exceptional shift to break cycles.
      mu = h(hi, hi) + 0.75 * abs1(h(hi, hi - 1));
    } else {
      mu = wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
    }
    qr_step(h, lo, hi, mu, rot);
  }

  std::sort(eig.begin(), eig.end(), [](cplx x, cplx y) {
    if (x.real() != y.real()) return x.real() > y.real();
    return x.imag() > y.imag();
  });
  return Spectrum{std::move(eig)};
}

cplx rightmost_of(const Spectrum& s) {
  if (s.eigenvalues.empty()) throw InvalidArgument("rightmost_of: empty spectrum");
  const double re_max = s.eigenvalues.front().real();
  double scale = 0.0;
  for (const auto& z : s.eigenvalues) scale = std::max(scale, std::abs(z));
  const double tie = 64.0 * std::numeric_limits<double>::epsilon() * std::max(scale, 1.0);
  cplx best = s.eigenvalues.front();
  for (const auto& z : s.eigenvalues) {
    if (z.real() < re_max - tie) break;
    if (z.imag() > best.imag()) best = z;
  }
  return best;
}

cplx rightmost_eigenvalue(const ComplexMatrix& a, const EigenOptions& opts) {
  return rightmost_of(eigenvalues(a, opts));
}

}  // namespace expmde
