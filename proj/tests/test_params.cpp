#include <doctest.h>

#include <stdexcept>

#include "fracwave/params.hpp"

using namespace fracwave;

static ModelParams mk(double k, double H, double H0 = 0.5,
                      TemporalKind kind = TemporalKind::White) {
  return {k, H, H0, kind};
}

TEST_CASE("wave regime classification") {
  CHECK(validate_params(mk(2.0, 0.3)).regime == Regime::WaveSolvable);
  // boundary kappa = 3 - 4H is excluded
  CHECK(validate_params(mk(1.8, 0.3)).regime == Regime::WaveNonSolvable);
  CHECK(validate_params(mk(1.81, 0.3)).regime == Regime::WaveSolvable);
  // kappa = 2 closed end
  CHECK(validate_params(mk(2.0, 0.26)).regime == Regime::WaveSolvable);
  // colored time admissible for the wave regime
  CHECK(validate_params(mk(2.0, 0.3, 0.75, TemporalKind::Colored)).regime ==
        Regime::WaveSolvable);
}

TEST_CASE("heat regime classification") {
  CHECK(validate_params(mk(2.0, 0.3, 0.75, TemporalKind::Colored), Equation::Heat).regime ==
        Regime::HeatSolvable);  // H0 + H = 1.05 > 3/4
  CHECK(validate_params(mk(2.0, 0.2, 0.5), Equation::Heat).regime ==
        Regime::HeatNonSolvable);  // H0 + H = 0.7 < 3/4
}

TEST_CASE("field range violations throw") {
  CHECK_THROWS_AS(validate_params(mk(0.0, 0.3)), std::domain_error);
  CHECK_THROWS_AS(validate_params(mk(2.5, 0.3)), std::domain_error);
  CHECK_THROWS_AS(validate_params(mk(2.0, 0.0)), std::domain_error);
  CHECK_THROWS_AS(validate_params(mk(2.0, 1.0)), std::domain_error);
  CHECK_THROWS_AS(validate_params(mk(2.0, 0.3, 0.4)), std::domain_error);
  CHECK_THROWS_AS(validate_params(mk(2.0, 0.3, 1.0, TemporalKind::Colored)),
                  std::domain_error);
  // white noise must carry H0 = 1/2 and colored must not
  CHECK_THROWS_AS(validate_params(mk(2.0, 0.3, 0.75, TemporalKind::White)),
                  std::domain_error);
  CHECK_THROWS_AS(validate_params(mk(2.0, 0.3, 0.5, TemporalKind::Colored)),
                  std::domain_error);
}

TEST_CASE("closed-form exponents") {
  ExponentSet e = exponents(validate_params(mk(2.0, 0.3)));
  CHECK(e.growth == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e.p_factor == doctest::Approx(2.0 / 3.2).epsilon(1e-14));
  CHECK(e.holder_time_sup == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(e.holder_space_sup == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(e.chaos_series_power == doctest::Approx(1.6).epsilon(1e-14));

  ExponentSet c = exponents(validate_params(mk(2.0, 0.3, 0.75, TemporalKind::Colored)));
  CHECK(c.growth == doctest::Approx(1.3125).epsilon(1e-14));

  // general kappa: time and space suprema split
  ExponentSet g = exponents(validate_params(mk(1.9, 0.45)));
  CHECK(g.holder_time_sup == doctest::Approx(1.0 - 2.0 / 1.9 + 0.9 / 1.9).epsilon(1e-14));
  CHECK(g.holder_space_sup == doctest::Approx(0.45 + 0.95 - 1.0).epsilon(1e-14));
}

TEST_CASE("exponents require a solvable regime") {
  CHECK_THROWS_AS(exponents(validate_params(mk(1.7, 0.3))), std::domain_error);
}

TEST_CASE("names") {
  CHECK(std::string(regime_name(Regime::WaveSolvable)) == "WaveSolvable");
  CHECK(std::string(temporal_kind_name(TemporalKind::Colored)) == "Colored");
}
