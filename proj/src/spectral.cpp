#include "fracwave/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace fracwave {

double c_H(double H) {
  if (!(H > 0.0) || !(H < 1.0)) throw std::domain_error("c_H requires H in (0,1)");
  return std::tgamma(2.0 * H + 1.0) * std::sin(M_PI * H) / (2.0 * M_PI);
}

double spectral_density(double xi, double H) {
  if (!(H > 0.0) || !(H < 1.0))
    throw std::domain_error("spectral_density requires H in (0,1)");
  if (xi == 0.0) return H < 0.5 ? 0.0 : (H == 0.5 ? 1.0 : INFINITY);
  return std::pow(std::abs(xi), 1.0 - 2.0 * H);
}

double temporal_kernel_value(double t, const TemporalKernel& k) {
  if (k.kind == TemporalKind::White)
    throw std::domain_error("the white temporal kernel has no pointwise value");
  if (t == 0.0) throw std::domain_error("colored temporal kernel is singular at t = 0");
  return std::pow(std::abs(t), 2.0 * k.hurst_time - 2.0);
}

IdentityCheck fbm_sine_identity(double r, double s, double H, const QuadratureSpec& q) {
  if (!(r > 0.0) || !(s > 0.0)) throw std::domain_error("fbm_sine_identity requires r,s > 0");
  if (!(H > 0.0) || !(H < 1.0)) throw std::domain_error("fbm_sine_identity requires H in (0,1)");

  const double d = std::abs(r - s);
  const double p = r + s;
  const double nu = 1.0 + 2.0 * H;
  // 2 sin(r e) sin(s e) = cos(d e) - cos(p e), so the full-line integral is
  // int_0^inf (cos(d e) - cos(p e)) e^{-nu} de.
  auto f = [d, p, nu](double e) {
    return (std::cos(d * e) - std::cos(p * e)) * std::pow(e, -nu);
  };

  const double cut = std::max(q.frequency_cutoff, 10.0);
  QuadResult head = integrate_adaptive(f, 0.0, 1.0, q.tolerance, 1e-300, q.max_subdivisions);
  QuadResult body = integrate_chunked(f, 1.0, cut, M_PI / p, q.tolerance);

  double tail = 0.0, tail_err = 0.0;
  if (q.tail_policy == TailPolicy::PowerExtrapolate) {
    if (d > 0.0) {
      QuadResult td = oscillatory_cos_tail(cut, -nu, d);
      tail += td.value;
      tail_err += td.error;
    } else {
      tail += power_law_tail(cut, -nu);
    }
    QuadResult tp = oscillatory_cos_tail(cut, -nu, p);
    tail -= tp.value;
    tail_err += tp.error;
  } else {
    // alternating-series envelope: |tail| <= 2 / (cut^{2H} * 2H * min(r,s))
    tail_err = 2.0 / (std::pow(cut, 2.0 * H) * 2.0 * H * std::min(r, s));
  }

  IdentityCheck out{};
  out.lhs = c_H(H) * (head.value + body.value + tail);
  out.lhs_error = c_H(H) * (head.error + body.error + tail_err);
  out.rhs = 0.25 * (std::pow(p, 2.0 * H) - std::pow(d, 2.0 * H));
  if (out.lhs_error > std::max(10.0 * q.tolerance * std::abs(out.rhs), 1e-12))
    throw accuracy_error("fbm_sine_identity quadrature did not reach tolerance",
                         out.lhs_error);
  return out;
}

}  // namespace fracwave
