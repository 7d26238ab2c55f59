#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fracwave/moments.hpp"

using namespace fracwave;

static ValidatedParams white(double k = 2.0, double H = 0.3) {
  return validate_params({k, H, 0.5, TemporalKind::White});
}
static ValidatedParams colored(double H0) {
  return validate_params({2.0, 0.3, H0, TemporalKind::Colored});
}

TEST_CASE("least squares on an exact line") {
  SlopeFit f = least_squares_fit({{0.0, 1.0}, {1.0, 3.0}, {2.0, 5.0}, {3.0, 7.0}});
  CHECK(f.slope == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(f.intercept == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f.max_residual < 1e-12);
}

TEST_CASE("upper series against frozen references") {
  const double expect[] = {5.720262123232, 12.604763215467, 26.372677470992,
                           53.908505751791};
  const double horizons[] = {2.0, 4.0, 8.0, 16.0};
  for (int i = 0; i < 4; ++i) {
    MomentSeries s = second_moment_upper(horizons[i], white(), 400);
    CHECK(s.log_partial_sum == doctest::Approx(expect[i]).epsilon(1e-9));
    CHECK(s.tail_controlled);
    CHECK(s.partial_sum >= 1.0);
  }
}

TEST_CASE("colored upper series against frozen references") {
  const double expect[] = {8.857781883592, 24.264345419989, 62.530878303161,
                           157.574430873697};
  const double horizons[] = {2.0, 4.0, 8.0, 16.0};
  for (int i = 0; i < 4; ++i) {
    MomentSeries s = second_moment_upper(horizons[i], colored(0.75), 400);
    CHECK(s.log_partial_sum == doctest::Approx(expect[i]).epsilon(1e-8));
    CHECK(s.tail_controlled);
  }
}

TEST_CASE("lower constant has a Beta-function closed form at kappa=2") {
  // c = int eta^{1-2H}/(1+eta^2)^2 = (1/2) B(1-H, 1+H)
  for (double H : {0.26, 0.3, 0.45}) {
    ValidatedParams p = white(2.0, H);
    const double closed = 0.5 * std::exp(std::lgamma(1.0 - H) + std::lgamma(1.0 + H) -
                                         std::lgamma(2.0));
    CHECK(lower_c_constant(p) == doctest::Approx(closed).epsilon(1e-9));
  }
}

TEST_CASE("lower series against frozen references and the sandwich") {
  const double expect[] = {0.414184111441, 1.035127722253, 2.266816153449,
                           4.525211935993};
  const double horizons[] = {2.0, 4.0, 8.0, 16.0};
  for (int i = 0; i < 4; ++i) {
    MomentSeries lo = second_moment_lower(horizons[i], white(), 400);
    MomentSeries hi = second_moment_upper(horizons[i], white(), 400);
    CHECK(lo.log_partial_sum == doctest::Approx(expect[i]).epsilon(1e-9));
    CHECK(lo.log_partial_sum <= hi.log_partial_sum);
    CHECK(second_moment_lower_max_log(horizons[i], white(), 400) <= lo.log_partial_sum);
  }
}

TEST_CASE("scaling of the first lower-bound integral") {
  for (double t : {2.0, 4.0}) {
    ScalingCheck c = a1_scaling_check(t, white());
    CHECK(std::abs(c.ratio / c.predicted - 1.0) < 1e-6);
  }
  ValidatedParams p = white(1.9, 0.45);
  ScalingCheck c = a1_scaling_check(3.0, p);
  CHECK(std::abs(c.ratio / c.predicted - 1.0) < 1e-6);
}

TEST_CASE("Laplace sine-product factorization") {
  LaplaceCheck one = laplace_sine_product_check(white(), {1.3});
  CHECK(one.lhs == doctest::Approx(one.rhs).epsilon(1e-10));
  LaplaceCheck two = laplace_sine_product_check(white(), {1.3, -0.8}, {}, 5, 2000000);
  CHECK(std::abs(two.lhs - two.rhs) <= two.lhs_error);
}

TEST_CASE("lyapunov fit recovers an exact power law") {
  std::vector<std::pair<double, double>> pts;
  for (double t : {2.0, 4.0, 8.0, 16.0, 32.0}) pts.emplace_back(t, 0.37 * std::pow(t, 1.3125));
  SlopeFit f = lyapunov_fit(pts);
  CHECK(f.slope == doctest::Approx(1.3125).epsilon(1e-9));
  CHECK(f.points_fitted >= 2);
  CHECK_THROWS_AS(lyapunov_fit({{2.0, 1.0}, {4.0, 2.0}, {8.0, 4.0}}), std::invalid_argument);
  CHECK_THROWS_AS(lyapunov_fit({{2.0, -1.0}, {4.0, 2.0}, {8.0, 4.0}, {16.0, 8.0}}),
                  std::domain_error);
}

TEST_CASE("p-th moment bound grows with p") {
  const double p2 = p_moment_upper_log(4.0, 2.0, white());
  const double p4 = p_moment_upper_log(4.0, 4.0, white());
  const double p8 = p_moment_upper_log(4.0, 8.0, white());
  CHECK(std::isfinite(p2));
  CHECK(p2 < p4);
  CHECK(p4 < p8);
}

TEST_CASE("weak intermittency at the reference point") {
  IntermittencyReport r = weak_intermittency_report(white());
  CHECK(r.growth_exponent == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(r.weakly_intermittent);
  CHECK(r.lower_rate_p2 > 0.0);
  for (const auto& [p, rate] : r.upper_rates) CHECK(std::isfinite(rate));
}
