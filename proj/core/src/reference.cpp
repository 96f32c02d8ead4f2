#include "expmde/reference.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

#include "expmde/densela.hpp"
#include "expmde/errors.hpp"

namespace expmde {

namespace {

// Numerator coefficients of the [13/13] Padé approximant, scaled to integers
// (b_j ∝ (26-j)!/(j!(13-j)!)); the denominator is the same with alternating signs.
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

ComplexMatrix lincomb(std::initializer_list<std::pair<double, const ComplexMatrix*>> terms,
                      double identity_coeff, std::size_t n) {
  ComplexMatrix out(n, n);
  auto d = out.data();
  for (const auto& [c, m] : terms) {
    const auto s = m->data();
    for (std::size_t i = 0; i < d.size(); ++i) d[i] += c * s[i];
  }
  out.add_to_diagonal(identity_coeff);
  return out;
}

using lcplx = std::complex<long double>;

// Minimal column-major long double matrix for the extended oracle.
struct WideMatrix {
  std::size_t n;
  std::vector<lcplx> v;

  explicit WideMatrix(std::size_t dim) : n(dim), v(dim * dim) {}
  lcplx& operator()(std::size_t i, std::size_t j) { return v[i + j * n]; }
  const lcplx& operator()(std::size_t i, std::size_t j) const { return v[i + j * n]; }
};

WideMatrix operator*(const WideMatrix& a, const WideMatrix& b) {
  WideMatrix c(a.n);
  for (std::size_t j = 0; j < a.n; ++j)
    for (std::size_t k = 0; k < a.n; ++k) {
      const lcplx bkj = b(k, j);
      for (std::size_t i = 0; i < a.n; ++i) c(i, j) += a(i, k) * bkj;
    }
  return c;
}

WideMatrix wide_lincomb(const long double (&c)[3], const WideMatrix* const (&m)[3], long double id) {
  WideMatrix out(m[0]->n);
  for (int t = 0; t < 3; ++t)
    for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] += c[t] * m[t]->v[i];
  for (std::size_t i = 0; i < out.n; ++i) out(i, i) += id;
  return out;
}

// Solves M X = B in place by Gaussian elimination with partial pivoting.
void wide_solve(WideMatrix m, WideMatrix& b) {
  const std::size_t n = m.n;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m(i, k)) > std::abs(m(p, k))) p = i;
    if (m(p, k) == lcplx(0)) throw SingularMatrix("expm_pade_extended: singular denominator");
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(k, j), m(p, j));
        std::swap(b(k, j), b(p, j));
      }
    for (std::size_t i = k + 1; i < n; ++i) {
      const lcplx f = m(i, k) / m(k, k);
      if (f == lcplx(0)) continue;
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
      for (std::size_t j = 0; j < n; ++j) b(i, j) -= f * b(k, j);
    }
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = n; i-- > 0;) {
      lcplx s = b(i, j);
      for (std::size_t k = i + 1; k < n; ++k) s -= m(i, k) * b(k, j);
      b(i, j) = s / m(i, i);
    }
}

}  // namespace

ComplexMatrix expm_pade_extended(const ComplexMatrix& a, const PadeConfig& cfg) {
  if (!a.is_square() || a.empty()) throw InvalidArgument("expm_pade_extended: matrix must be square");
  if (!a.all_finite()) throw InvalidArgument("expm_pade_extended: non-finite entry");
  const std::size_t n = a.rows();
  const int s = pade_scaling_power(a, cfg);
  const long double scale = std::ldexp(1.0L, -s);
  WideMatrix as(n);
  for (std::size_t i = 0; i < as.v.size(); ++i)
    as.v[i] = lcplx(a.data()[i].real(), a.data()[i].imag()) * scale;

  long double b[14];
  for (int j = 0; j < 14; ++j) b[j] = kPade13[static_cast<std::size_t>(j)];
  const WideMatrix a2 = as * as;
  const WideMatrix a4 = a2 * a2;
  const WideMatrix a6 = a4 * a2;
  const WideMatrix* const pw[3] = {&a6, &a4, &a2};

  WideMatrix u = a6 * wide_lincomb({b[13], b[11], b[9]}, pw, 0.0L);
  const WideMatrix u_low = wide_lincomb({b[7], b[5], b[3]}, pw, b[1]);
  for (std::size_t i = 0; i < u.v.size(); ++i) u.v[i] += u_low.v[i];
  u = as * u;

  WideMatrix v = a6 * wide_lincomb({b[12], b[10], b[8]}, pw, 0.0L);
  const WideMatrix v_low = wide_lincomb({b[6], b[4], b[2]}, pw, b[0]);
  for (std::size_t i = 0; i < v.v.size(); ++i) v.v[i] += v_low.v[i];

  WideMatrix den(n), x(n);
  for (std::size_t i = 0; i < v.v.size(); ++i) {
    den.v[i] = v.v[i] - u.v[i];
    x.v[i] = v.v[i] + u.v[i];
  }
  wide_solve(std::move(den), x);
  for (int i = 0; i < s; ++i) x = x * x;

  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < x.v.size(); ++i)
    out.data()[i] = cplx(static_cast<double>(x.v[i].real()), static_cast<double>(x.v[i].imag()));
  return out;
}

int pade_scaling_power(const ComplexMatrix& a, const PadeConfig& cfg) {
  if (!(cfg.scaling_threshold > 0.0)) throw InvalidArgument("expm_pade: scaling threshold must be positive");
  const double n1 = norm_1(a);
  if (n1 <= cfg.scaling_threshold) return 0;
  return static_cast<int>(std::ceil(std::log2(n1 / cfg.scaling_threshold)));
}

ComplexMatrix expm_pade(const ComplexMatrix& a, const PadeConfig& cfg) {
  if (!a.is_square() || a.empty()) throw InvalidArgument("expm_pade: matrix must be square");
  if (!a.all_finite()) throw InvalidArgument("expm_pade: non-finite entry");
  const std::size_t n = a.rows();
  const int s = pade_scaling_power(a, cfg);
  ComplexMatrix as = a;
  if (s > 0) as *= std::ldexp(1.0, -s);

  const auto& b = kPade13;
  const ComplexMatrix a2 = as * as;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;

  const ComplexMatrix u_inner = lincomb({{b[13], &a6}, {b[11], &a4}, {b[9], &a2}}, 0.0, n);
  ComplexMatrix u = a6 * u_inner;
  u += lincomb({{b[7], &a6}, {b[5], &a4}, {b[3], &a2}}, b[1], n);
  u = as * u;

  const ComplexMatrix v_inner = lincomb({{b[12], &a6}, {b[10], &a4}, {b[8], &a2}}, 0.0, n);
  ComplexMatrix v = a6 * v_inner;
  v += lincomb({{b[6], &a6}, {b[4], &a4}, {b[2], &a2}}, b[0], n);

  ComplexMatrix x = lu_solve(lu_factor(v - u), v + u);
  for (int i = 0; i < s; ++i) x = x * x;
  return x;
}

ComplexMatrix expm_taylor(const ComplexMatrix& a, int terms) {
  if (!a.is_square() || a.empty()) throw InvalidArgument("expm_taylor: matrix must be square");
  if (norm_1(a) > 1.0) throw InvalidArgument("expm_taylor: requires |A|_1 <= 1");
  if (terms < 1) throw InvalidArgument("expm_taylor: need at least one term");
  const std::size_t n = a.rows();
  ComplexMatrix sum = ComplexMatrix::identity(n);
  ComplexMatrix power = ComplexMatrix::identity(n);
  for (int j = 1; j < terms; ++j) {
    power = power * a;
    power *= 1.0 / j;
    sum += power;
  }
  return sum;
}

}  // namespace expmde
