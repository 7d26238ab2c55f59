#pragma once

#include <stdexcept>
#include <string>

namespace fracwave {

enum class TemporalKind { White, Colored };
enum class Regime { WaveSolvable, WaveNonSolvable, HeatSolvable, HeatNonSolvable };
enum class Equation { Wave, Heat };

struct ModelParams {
  double kappa = 2.0;        // order of the fractional Laplacian, in (0,2]
  double hurst_space = 0.3;  // H in (0,1)
  double hurst_time = 0.5;   // H0 in [1/2,1)
  TemporalKind temporal_kind = TemporalKind::White;
};

struct ValidatedParams {
  ModelParams params;
  Regime regime;

  bool solvable() const {
    return regime == Regime::WaveSolvable || regime == Regime::HeatSolvable;
  }
};

struct ExponentSet {
  double growth;            // t-exponent of log E|u|^2
  double p_factor;          // p-exponent of the p-th moment upper bound
  double holder_time_sup;   // open supremum of time Holder orders
  double holder_space_sup;  // open supremum of space Holder orders
  double chaos_series_power;  // a = 2[(1-2/kappa)+2H/kappa]+1
};

// Classifies (kappa, H, H0) against the solvability conditions: the wave
// equation needs H in (1/4,1/2) and kappa in (3-4H, 2]; the heat variant needs
// H0 + H > 3/4. Field-range violations throw std::domain_error.
ValidatedParams validate_params(const ModelParams& p, Equation eq = Equation::Wave);

// Closed-form exponents; requires a solvable regime.
ExponentSet exponents(const ValidatedParams& p);

const char* regime_name(Regime r);
const char* temporal_kind_name(TemporalKind k);

}  // namespace fracwave
