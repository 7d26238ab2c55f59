#include "fracwave/params.hpp"

#include <cmath>

namespace fracwave {

static void check_field_ranges(const ModelParams& p) {
  if (!(p.kappa > 0.0) || p.kappa > 2.0)
    throw std::domain_error("kappa must lie in (0, 2]");
  if (!(p.hurst_space > 0.0) || !(p.hurst_space < 1.0))
    throw std::domain_error("hurst_space must lie in (0, 1)");
  if (!(p.hurst_time >= 0.5) || !(p.hurst_time < 1.0))
    throw std::domain_error("hurst_time must lie in [1/2, 1)");
  if (p.temporal_kind == TemporalKind::White && p.hurst_time != 0.5)
    throw std::domain_error("temporal_kind White forces hurst_time = 1/2");
  if (p.temporal_kind == TemporalKind::Colored && p.hurst_time == 0.5)
    throw std::domain_error(
        "temporal_kind Colored requires hurst_time > 1/2 (the |t|^{2H0-2} kernel "
        "is not locally integrable at H0 = 1/2)");
}

ValidatedParams validate_params(const ModelParams& p, Equation eq) {
  check_field_ranges(p);
  const double H = p.hurst_space;
  Regime regime;
  if (eq == Equation::Wave) {
    const bool ok = H > 0.25 && H < 0.5 && p.kappa > 3.0 - 4.0 * H && p.kappa <= 2.0;
    regime = ok ? Regime::WaveSolvable : Regime::WaveNonSolvable;
  } else {
    const bool ok = H < 0.5 && p.hurst_time + H > 0.75;
    regime = ok ? Regime::HeatSolvable : Regime::HeatNonSolvable;
  }
  return {p, regime};
}

ExponentSet exponents(const ValidatedParams& vp) {
  if (!vp.solvable()) throw std::domain_error("exponents require a solvable regime");
  const double k = vp.params.kappa;
  const double H = vp.params.hurst_space;
  const double H0 = vp.params.hurst_time;
  ExponentSet e{};
  if (vp.regime == Regime::HeatSolvable) {
    e.growth = (2.0 * H0 + H - 1.0) / H;
  } else {
    e.growth = (2.0 * k * H0 + 2.0 * (k - 2.0) + 4.0 * H) / (3.0 * k - 4.0 + 4.0 * H);
    if (H0 == 0.5 && std::abs(e.growth - 1.0) > 1e-12)
      throw std::logic_error("growth exponent must equal 1 at H0 = 1/2");
  }
  e.p_factor = k / (3.0 * k - 4.0 + 4.0 * H);
  e.holder_time_sup = 1.0 - 2.0 / k + 2.0 * H / k;
  e.holder_space_sup = H + k / 2.0 - 1.0;
  e.chaos_series_power = 2.0 * ((1.0 - 2.0 / k) + 2.0 * H / k) + 1.0;
  return e;
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::WaveSolvable: return "WaveSolvable";
    case Regime::WaveNonSolvable: return "WaveNonSolvable";
    case Regime::HeatSolvable: return "HeatSolvable";
    case Regime::HeatNonSolvable: return "HeatNonSolvable";
  }
  return "?";
}

const char* temporal_kind_name(TemporalKind k) {
  return k == TemporalKind::White ? "White" : "Colored";
}

}  // namespace fracwave
