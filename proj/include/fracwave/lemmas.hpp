#pragma once

#include <cstdint>
#include <vector>

#include "fracwave/moments.hpp"
#include "fracwave/quadrature.hpp"

namespace fracwave {

enum class LemmaId { L1, L2, L3, L5, L6, L7, L8 };

struct LemmaCertificate {
  LemmaId lemma_id;
  double lhs = 0.0;
  double rhs = 0.0;
  double rel_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

// int exp(-a x^2) |x|^theta dx = a^{-(1+theta)/2} int exp(-x^2) |x|^theta dx.
LemmaCertificate gaussian_scaling(double a, double theta, const QuadratureSpec& q = {});

// Ordered-simplex Dirichlet integral against prod Gamma(alpha_i+1) t^{alpha+n}
// / Gamma(alpha+n+1); lhs by Monte Carlo (gap exponents over sorted uniforms).
LemmaCertificate dirichlet_simplex(const std::vector<double>& alphas, double t,
                                   std::uint64_t seed, std::size_t samples = 1000000);

// Gamma(an+b) / [(n!)^a a^{an+b-1/2} n^{b-1/2-a/2}] for each n.
std::vector<double> stirling_ratio(double a, double b, const std::vector<int>& n_values);

// S(x) = sum x^n/(n!)^a; fits log log S against log x (slope ~ 1/a).
SlopeFit ml_series_growth(double a, const std::vector<double>& x_values);

enum class IntegralVerdict { Convergent, Divergent };
struct SinePowerResult {
  double truncated_value;  // int_0^cutoff sin^2(x) x^{-alpha} dx (plus tail if convergent)
  IntegralVerdict verdict;  // by endpoint exponent analysis: finite iff alpha in (1,3)
};
SinePowerResult sine_power_integral(double alpha, double cutoff);

// int sin^2(ax)|x|^{-2+beta}((b|x|^lambda) ^ 2) dx <= C a^{2 gamma} b^{(1-beta-2 gamma)/lambda}
// with C = max of the lemma's two explicit y-integrals.
LemmaCertificate capped_sine_bound(double a, double b, double lambda, double beta,
                                   double gamma, const QuadratureSpec& q = {});

// a/(1+a^2), with a quadrature companion check at 1e-8.
double laplace_sine(double a);
LemmaCertificate laplace_sine_certificate(double a, const QuadratureSpec& q = {});

// Increment cap |sin((t+h)x) - sin(tx)| <= (2^{1-gamma}/gamma) min(|hx|^gamma, |hx|),
// checked pointwise over seeded random draws.
bool sine_increment_cap_check(std::uint64_t seed, std::size_t draws = 100000);

// Runs the registered grid of every certificate; all must pass.
std::vector<LemmaCertificate> lemma_certificate_suite(std::uint64_t seed = 7);

}  // namespace fracwave
