#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fracwave/spectral.hpp"

using namespace fracwave;

TEST_CASE("spectral normalization constant") {
  // C_H = Gamma(2H+1) sin(pi H) / (2 pi); at H = 1/2 this is 1/(2 pi)
  CHECK(c_H(0.5) == doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-14));
  CHECK(c_H(0.25) == doctest::Approx(std::exp(std::lgamma(1.5)) *
                                     std::sin(M_PI * 0.25) / (2.0 * M_PI))
                         .epsilon(1e-14));
}

TEST_CASE("spectral density power law") {
  CHECK(spectral_density(2.0, 0.3) == doctest::Approx(std::pow(2.0, 0.4)).epsilon(1e-14));
  CHECK(spectral_density(-2.0, 0.3) == doctest::Approx(std::pow(2.0, 0.4)).epsilon(1e-14));
}

TEST_CASE("temporal kernel") {
  TemporalKernel k{TemporalKind::Colored, 0.75};
  CHECK(temporal_kernel_value(2.0, k) ==
        doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-14));
  CHECK(temporal_kernel_value(-2.0, k) == doctest::Approx(temporal_kernel_value(2.0, k)));
  CHECK_THROWS_AS(temporal_kernel_value(0.0, k), std::domain_error);
  TemporalKernel w{TemporalKind::White, 0.5};
  CHECK_THROWS_AS(temporal_kernel_value(1.0, w), std::domain_error);
}

TEST_CASE("sine-product identity at a closed-form point") {
  // r = s = 1: rhs = 2^{2H}/4
  IdentityCheck c = fbm_sine_identity(1.0, 1.0, 0.3);
  CHECK(c.rhs == doctest::Approx(0.25 * std::pow(2.0, 0.6)).epsilon(1e-14));
  CHECK(std::abs(c.lhs - c.rhs) / c.rhs < 1e-6);
  CHECK(c.lhs_error < 1e-4 * c.rhs);
}

TEST_CASE("sine-product identity across scales and roughness") {
  for (double H : {0.26, 0.4, 0.49}) {
    for (double r : {0.25, 2.0}) {
      IdentityCheck c = fbm_sine_identity(r, 0.5, H);
      CHECK(std::abs(c.lhs - c.rhs) / std::abs(c.rhs) < 1e-4);
    }
  }
}

TEST_CASE("identity rejects non-positive lags and invalid H") {
  CHECK_THROWS_AS(fbm_sine_identity(0.0, 1.0, 0.3), std::domain_error);
  CHECK_THROWS_AS(fbm_sine_identity(1.0, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(fbm_sine_identity(1.0, 1.0, 1.0), std::domain_error);
}
