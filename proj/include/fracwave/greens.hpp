#pragma once

#include <cmath>
#include <stdexcept>

namespace fracwave {

// Fourier symbol of the wave Green's function: sin(t|xi|^{kappa/2}) / |xi|^{kappa/2},
// extended by its limit t at xi = 0.
inline double green_hat(double t, double xi, double kappa) {
  if (t < 0.0) throw std::domain_error("green_hat requires t >= 0");
  const double w = std::pow(std::abs(xi), 0.5 * kappa);
  const double tw = t * w;
  if (tw < 1e-4) {
    // series for sin(tw)/w = t(1 - (tw)^2/6 + (tw)^4/120 - ...)
    const double z = tw * tw;
    return t * (1.0 - z / 6.0 * (1.0 - z / 20.0));
  }
  return std::sin(tw) / w;
}

// Real-space kernel for d = 1, kappa = 2: half the light-cone indicator.
inline double green_wave_1d(double t, double x) {
  if (t < 0.0) throw std::domain_error("green_wave_1d requires t >= 0");
  return std::abs(x) < t ? 0.5 : 0.0;
}

}  // namespace fracwave
