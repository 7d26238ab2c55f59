#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fracwave/params.hpp"
#include "fracwave/quadrature.hpp"

namespace fracwave {

struct MomentSeries {
  std::vector<double> terms;      // per-order terms, index 0 is the constant 1
  std::vector<double> log_terms;  // authoritative for large t (terms may overflow)
  double partial_sum = 1.0;
  double log_partial_sum = 0.0;
  double tail_bound = 0.0;
  bool tail_controlled = true;
  double last_ratio = 0.0;
  int orders_used = 0;
};

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
  std::vector<std::pair<double, double>> points;  // all supplied (abscissa, ordinate)
  int points_fitted = 0;                          // trailing count actually fitted
};

// Plain least squares over (x, y) pairs.
SlopeFit least_squares_fit(const std::vector<std::pair<double, double>>& pts);

// 1 + sum of the explicit chaos upper-bound terms up to order N. The tail is
// controlled by the ratio test once successive ratios fall below 1/2;
// otherwise tail_controlled is false and last_ratio records the failure.
MomentSeries second_moment_upper(double t, const ValidatedParams& p, int N,
                                 const QuadratureSpec& q = {});

// c = int_0^inf eta^{1-2H} / (1 + eta^kappa)^2 deta
double lower_c_constant(const ValidatedParams& p, const QuadratureSpec& q = {});

// Explicit lower-bound terms L_n(t) = c^n n! t^{n(2H0+2-(4-4H)/kappa)}
//                                     / Gamma(4n(1-(1-H)/kappa)+1).
MomentSeries second_moment_lower(double t, const ValidatedParams& p, int N,
                                 const QuadratureSpec& q = {});
// 1 + max over n <= N of L_n(t) (also a valid lower bound), in log space.
double second_moment_lower_max_log(double t, const ValidatedParams& p, int N,
                                   const QuadratureSpec& q = {});

struct ScalingCheck {
  double ratio;
  double predicted;
};
// A_1(t)/A_1(1) against t^{4(1-(1-H)/kappa)}, where
// A_1(t) = int_0^inf (1 - cos(t eta^{kappa/2}))^2 eta^{1-2H-2kappa} deta.
ScalingCheck a1_scaling_check(double t, const ValidatedParams& p,
                              const QuadratureSpec& q = {});

struct LaplaceCheck {
  double lhs;
  double rhs;
  double lhs_error;
};
// int_0^inf e^{-t} int_{simplex} prod_j sin((s_{j+1}-s_j) |eta_j|^{kappa/2}) ds dt
// against prod_j w_j/(1+w_j^2) with w_j = |eta_j|^{kappa/2}; n = 1 by
// quadrature, n = 2,3 by Monte Carlo over an Exp(1) horizon.
LaplaceCheck laplace_sine_product_check(const ValidatedParams& p,
                                        const std::vector<double>& eta,
                                        const QuadratureSpec& q = {},
                                        std::uint64_t seed = 1,
                                        std::size_t samples = 2000000);

// Fits log(log M) against log t on the trailing half of the points (the
// growth statements are t -> infinity limits; the early horizons carry the
// pre-asymptotic transient). Input pairs are (t, log M(t)) with log M > 0.
SlopeFit lyapunov_fit(const std::vector<std::pair<double, double>>& series);

// log of the p-th moment upper-bound series sum_n (p-1)^{n/2} sqrt(bound_n(t)).
double p_moment_upper_log(double t, double p_order, const ValidatedParams& p,
                          const QuadratureSpec& q = {});

struct IntermittencyReport {
  double growth_exponent;
  double lower_rate_p2;                              // log M_lower(t) / t^e at t = horizon
  std::vector<std::pair<double, double>> upper_rates;  // (p, p * log S_p(t) / t^e)
  bool weakly_intermittent;
  double horizon;
};
IntermittencyReport weak_intermittency_report(const ValidatedParams& p,
                                              double horizon = 16.0,
                                              const QuadratureSpec& q = {});

}  // namespace fracwave
