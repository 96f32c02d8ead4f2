#include "expmde/densela.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "expmde/errors.hpp"

namespace expmde {

namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;

void require_square(const ComplexMatrix& m, const char* who) {
  if (!m.is_square() || m.empty()) throw InvalidArgument(std::string(who) + ": matrix must be square and non-empty");
}

double vec_norm(std::span<const cplx> v) {
  double scale = 0.0, ssq = 1.0;
  for (const auto& z : v) {
    for (double x : {z.real(), z.imag()}) {
      if (x == 0.0) continue;
      const double ax = std::abs(x);
      if (scale < ax) {
        ssq = 1.0 + ssq * (scale / ax) * (scale / ax);
        scale = ax;
      } else {
        ssq += (ax / scale) * (ax / scale);
      }
    }
  }
  return scale * std::sqrt(ssq);
}

std::vector<cplx> matvec(const ComplexMatrix& a, std::span<const cplx> x) {
  std::vector<cplx> y(a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const cplx xj = x[j];
    const auto aj = a.col(j);
    for (std::size_t i = 0; i < a.rows(); ++i) y[i] += aj[i] * xj;
  }
  return y;
}

std::vector<cplx> adjoint_matvec(const ComplexMatrix& a, std::span<const cplx> x) {
  std::vector<cplx> y(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const auto aj = a.col(j);
    cplx s{};
    for (std::size_t i = 0; i < a.rows(); ++i) s += std::conj(aj[i]) * x[i];
    y[j] = s;
  }
  return y;
}

}  // namespace

LUFactors lu_factor(ComplexMatrix m) {
  require_square(m, "lu_factor");
  if (!m.all_finite()) throw InvalidArgument("lu_factor: non-finite entry");
  const std::size_t n = m.rows();
  const double threshold = static_cast<double>(n) * kUnitRoundoff * norm_inf(m);

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double pmax = std::abs(m(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(m(i, k));
      if (v > pmax) {
        pmax = v;
        p = i;
      }
    }
    if (pmax <= threshold) {
      throw SingularMatrix("lu_factor: pivot " + std::to_string(pmax) + " at step " +
                           std::to_string(k) + " below n*u*|M|_inf");
    }
    if (p != k) {
      std::swap(perm[p], perm[k]);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
    }
    const cplx inv_pivot = 1.0 / m(k, k);
    cplx* colk = m.col(k).data();
    for (std::size_t i = k + 1; i < n; ++i) colk[i] *= inv_pivot;
    for (std::size_t j = k + 1; j < n; ++j) {
      cplx* colj = m.col(j).data();
      const cplx ukj = colj[k];
      if (ukj == cplx{}) continue;
      for (std::size_t i = k + 1; i < n; ++i) colj[i] -= colk[i] * ukj;
    }
  }
  return LUFactors{std::move(m), std::move(perm)};
}

ComplexMatrix lu_solve(const LUFactors& f, ComplexMatrix b) {
  const std::size_t n = f.size();
  if (b.rows() != n) throw InvalidArgument("lu_solve: dimension mismatch");
  std::vector<cplx> work(n);
  for (std::size_t c = 0; c < b.cols(); ++c) {
    auto x = b.col(c);
    for (std::size_t i = 0; i < n; ++i) work[i] = x[f.perm[i]];
    // L y = P b
    for (std::size_t k = 0; k < n; ++k) {
      const cplx yk = work[k];
      if (yk == cplx{}) continue;
      const cplx* lk = f.lu.col(k).data();
      for (std::size_t i = k + 1; i < n; ++i) work[i] -= lk[i] * yk;
    }
    // U x = y
    for (std::size_t k = n; k-- > 0;) {
      const cplx* uk = f.lu.col(k).data();
      work[k] /= uk[k];
      const cplx xk = work[k];
      if (xk == cplx{}) continue;
      for (std::size_t i = 0; i < k; ++i) work[i] -= uk[i] * xk;
    }
    std::copy(work.begin(), work.end(), x.begin());
  }
  return b;
}

ComplexMatrix inverse(const ComplexMatrix& m) {
  return lu_solve(lu_factor(m), ComplexMatrix::identity(m.rows()));
}

double norm_1(const ComplexMatrix& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (const auto& z : a.col(j)) s += std::abs(z);
    best = std::max(best, s);
  }
  return best;
}

double norm_inf(const ComplexMatrix& a) {
  std::vector<double> rows(a.rows(), 0.0);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const auto aj = a.col(j);
    for (std::size_t i = 0; i < a.rows(); ++i) rows[i] += std::abs(aj[i]);
  }
  return rows.empty() ? 0.0 : *std::max_element(rows.begin(), rows.end());
}

double norm_fro(const ComplexMatrix& a) { return vec_norm(a.data()); }

Norm2Estimate norm2_estimate(const ComplexMatrix& a, double rel_tol, int max_iter) {
  Norm2Estimate out;
  const double fro = norm_fro(a);
  if (fro == 0.0) return out;

  const std::size_t n = a.cols();
  std::vector<cplx> v(n, cplx(1.0 / std::sqrt(static_cast<double>(n)), 0.0));
  // The all-ones start can be orthogonal to the row space; fall back to the
  // heaviest column's unit vector.
  if (vec_norm(matvec(a, v)) <= 1e-12 * fro) {
    std::size_t best = 0;
    double best_norm = -1.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double cn = vec_norm(a.col(j));
      if (cn > best_norm) {
        best_norm = cn;
        best = j;
      }
    }
    std::fill(v.begin(), v.end(), cplx{});
    v[best] = 1.0;
  }

  double sigma = 0.0;
  for (int it = 1; it <= max_iter; ++it) {
    const auto w = matvec(a, v);
    const double next = vec_norm(w);
    out.iterations = it;
    if (it > 1 && std::abs(next - sigma) <= rel_tol * next) {
      out.value = next;
      return out;
    }
    sigma = next;
    auto z = adjoint_matvec(a, w);
    const double zn = vec_norm(z);
    if (zn == 0.0) {
      out.value = sigma;
      return out;
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = z[i] / zn;
  }
  out.value = fro;
  out.degraded = true;
  return out;
}

double norm2(const ComplexMatrix& a) { return norm2_estimate(a).value; }

ComplexMatrix qr_unitary(const ComplexMatrix& m) {
  require_square(m, "qr_unitary");
  const std::size_t n = m.rows();
  ComplexMatrix r = m;
  std::vector<std::vector<cplx>> reflectors(n);

  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::vector<cplx> v(r.col(k).begin() + static_cast<std::ptrdiff_t>(k), r.col(k).end());
    const double xnorm = vec_norm(v);
    if (xnorm == 0.0) continue;
    const cplx phase = std::abs(v[0]) == 0.0 ? cplx(1.0) : v[0] / std::abs(v[0]);
    v[0] += phase * xnorm;
    const double vn = vec_norm(v);
    for (auto& z : v) z /= vn;
    // R[k:, k:] -= 2 v (vᴴ R[k:, k:])
    for (std::size_t j = k; j < n; ++j) {
      cplx s{};
      for (std::size_t i = k; i < n; ++i) s += std::conj(v[i - k]) * r(i, j);
      s *= 2.0;
      for (std::size_t i = k; i < n; ++i) r(i, j) -= v[i - k] * s;
    }
    reflectors[k] = std::move(v);
  }

  ComplexMatrix q = ComplexMatrix::identity(n);
  for (std::size_t k = n; k-- > 0;) {
    const auto& v = reflectors[k];
    if (v.empty()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      cplx s{};
      for (std::size_t i = k; i < n; ++i) s += std::conj(v[i - k]) * q(i, j);
      s *= 2.0;
      for (std::size_t i = k; i < n; ++i) q(i, j) -= v[i - k] * s;
    }
  }

  for (std::size_t j = 0; j < n; ++j) {
    const cplx rjj = r(j, j);
    if (std::abs(rjj) == 0.0) continue;
    const cplx phase = rjj / std::abs(rjj);
    for (auto& z : q.col(j)) z *= phase;
  }
  return q;
}

}  // namespace expmde
