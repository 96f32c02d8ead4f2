#include "expmde/talbot.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "expmde/densela.hpp"
#include "expmde/errors.hpp"
#include "ordered_sum.hpp"

namespace expmde {

namespace {

using std::numbers::pi;

bool is_real(const ComplexMatrix& a) {
  for (const cplx& z : a.data())
    if (z.imag() != 0.0) return false;
  return true;
}

double theta_of(const TalbotParams& p, long j) {
  return -pi + (static_cast<double>(j) + 0.5) * 2.0 * pi / static_cast<double>(p.m);
}

void validate(const TalbotParams& p) {
  if (p.m < 2 || p.m % 2 != 0) throw InvalidArgument("talbot: m must be even and >= 2");
  if (!(p.mu_t > 0.0)) throw InvalidArgument("talbot: mu_t must be positive");
  if (!(p.alpha_t > 0.0 && p.alpha_t < 1.0)) throw InvalidArgument("talbot: alpha_t must lie in (0, 1)");
}

}  // namespace

cplx talbot_node(const TalbotParams& p, double theta) {
  const double at = p.alpha_t * theta;
  const double cot_term = theta == 0.0 ? 1.0 / p.alpha_t : theta * std::cos(at) / std::sin(at);
  return static_cast<double>(p.m) * cplx(-p.sigma_t + p.mu_t * cot_term, p.nu_t * theta);
}

cplx talbot_node_deriv(const TalbotParams& p, double theta) {
  double re = 0.0;
  if (theta != 0.0) {
    const double at = p.alpha_t * theta;
    const double s = std::sin(at);
    re = p.mu_t * (std::cos(at) / s - at / (s * s));
  }
  return static_cast<double>(p.m) * cplx(re, p.nu_t);
}

ComplexMatrix expm_talbot(const ComplexMatrix& a, const TalbotParams& p, unsigned threads) {
  if (!a.is_square() || a.empty()) throw InvalidArgument("talbot: matrix must be square and non-empty");
  validate(p);
  const std::size_t n = a.rows();
  const ComplexMatrix eye = ComplexMatrix::identity(n);

  auto term = [&](long j) {
    const double theta = theta_of(p, j);
    const cplx z = talbot_node(p, theta);
    const cplx w = std::exp(z) * talbot_node_deriv(p, theta);
    ComplexMatrix shifted = a * -1.0;
    shifted.add_to_diagonal(z);
    try {
      ComplexMatrix r = lu_solve(lu_factor(std::move(shifted)), eye);
      r *= w;
      return r;
    } catch (const SingularMatrix& e) {
      throw SingularMatrix("talbot node j=" + std::to_string(j) + ": " + e.what(), j);
    }
  };

  const long m = p.m;
  if (is_real(a)) {
    ComplexMatrix s = detail::ordered_sum(m / 2, m - 1, threads, n, n, term);
    ComplexMatrix out(n, n);
    const double scale = 2.0 / static_cast<double>(m);
    for (std::size_t i = 0; i < s.data().size(); ++i) out.data()[i] = scale * s.data()[i].imag();
    return out;
  }
  ComplexMatrix s = detail::ordered_sum(0, m - 1, threads, n, n, term);
  s *= cplx(0.0, -1.0 / static_cast<double>(m));
  return s;
}

}  // namespace expmde
