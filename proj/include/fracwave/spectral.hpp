#pragma once

#include "fracwave/params.hpp"
#include "fracwave/quadrature.hpp"

namespace fracwave {

// C_H = Gamma(2H+1) sin(pi H) / (2 pi), the spectral normalization of the
// fractional covariance.
double c_H(double H);

// Spectral density |xi|^{1-2H} of the spatial noise.
double spectral_density(double xi, double H);

// Pointwise value |t|^{2H0-2} of the colored temporal kernel.
struct TemporalKernel {
  TemporalKind kind = TemporalKind::White;
  double hurst_time = 0.5;
};
double temporal_kernel_value(double t, const TemporalKernel& k);

// Both sides of the sine-product spectral identity
//   C_H int_R sin(r|eta|) sin(s|eta|) |eta|^{-1-2H} deta
//     = (|r+s|^{2H} - |r-s|^{2H}) / 4,
// the left side by oscillatory quadrature, the right side in closed form.
struct IdentityCheck {
  double lhs;
  double rhs;
  double lhs_error;  // quadrature + tail error estimate
};
IdentityCheck fbm_sine_identity(double r, double s, double H, const QuadratureSpec& q = {});

}  // namespace fracwave
