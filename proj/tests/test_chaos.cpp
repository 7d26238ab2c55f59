#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fracwave/chaos.hpp"
#include "fracwave/greens.hpp"

using namespace fracwave;

static ValidatedParams wave(double k = 2.0, double H = 0.3) {
  return validate_params({k, H, 0.5, TemporalKind::White});
}

TEST_CASE("kernel Fourier transform at hand-checked points") {
  // n = 1: amplitude green_hat(t - s1, xi1), phase -x xi1
  std::complex<double> v = chaos_kernel_hat({1.0}, {1.5}, 2.0, 0.0, 2.0);
  CHECK(v.real() == doctest::Approx(std::sin(1.5) / 1.5).epsilon(1e-14));
  CHECK(v.imag() == doctest::Approx(0.0));
  std::complex<double> w = chaos_kernel_hat({1.0}, {1.5}, 2.0, 0.7, 2.0);
  CHECK(std::abs(w) == doctest::Approx(std::abs(std::sin(1.5) / 1.5)).epsilon(1e-14));
  CHECK(std::arg(w) == doctest::Approx(-0.7 * 1.5).epsilon(1e-12));

  // n = 2: (1/2!) green_hat(s2-s1, xi1) green_hat(t-s2, xi1+xi2)
  std::complex<double> u = chaos_kernel_hat({0.5, 1.5}, {2.0, -1.0}, 2.0, 0.0, 2.0);
  const double expect = 0.5 * green_hat(1.0, 2.0, 2.0) * green_hat(0.5, 1.0, 2.0);
  CHECK(u.real() == doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("kernel rejects unordered times") {
  CHECK_THROWS_AS(chaos_kernel_hat({1.5, 0.5}, {1.0, 1.0}, 2.0, 0.0, 2.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(chaos_kernel_hat({0.5, 2.5}, {1.0, 1.0}, 2.0, 0.0, 2.0),
                  std::invalid_argument);
}

TEST_CASE("J integrals at kappa=2, H=0.3") {
  ValidatedParams p = wave();
  // a = 0 has the closed form int sin^2(x)/x^2 dx = pi
  CHECK(J_integral(0, p) == doctest::Approx(M_PI).epsilon(1e-9));
  CHECK(J_integral(1, p) == doctest::Approx(3.29365580561).epsilon(1e-9));
  CHECK(J_integral(2, p) == doctest::Approx(6.35947125110).epsilon(1e-9));
}

TEST_CASE("J integral signals divergence at the exponent boundary") {
  // kappa=2, H=0.25, a=2 puts the exponent at the boundary of (1,3)
  ValidatedParams p = validate_params({2.0, 0.2501, 0.5, TemporalKind::White});
  p.params.hurst_space = 0.25;  // push exactly onto the boundary
  CHECK_THROWS_AS(J_integral(2, p), std::domain_error);
}

TEST_CASE("first-order norm against the frozen reference") {
  CHECK(chaos_norm_white(1, 1.0, wave()).value ==
        doctest::Approx(2.05853487833).epsilon(1e-9));
  CHECK(chaos_norm_white(1, 0.0, wave()).value == 0.0);
  CHECK_THROWS_AS(chaos_norm_white(1, -1.0, wave()), std::domain_error);
  CHECK_THROWS_AS(chaos_norm_white(5, 1.0, wave()), std::domain_error);
}

TEST_CASE("second-order norm: quadrature and Monte Carlo agree") {
  ChaosOrderResult q2 = chaos_norm_white(2, 1.0, wave());
  CHECK(q2.value == doctest::Approx(2.5947).epsilon(2e-3));
  ChaosOrderResult m2 = chaos_norm_white_mc(2, 1.0, wave(), 42, 400000);
  CHECK(std::abs(q2.value - m2.value) <= q2.error_estimate + m2.error_estimate);
  ChaosOrderResult q1 = chaos_norm_white(1, 1.0, wave());
  ChaosOrderResult m1 = chaos_norm_white_mc(1, 1.0, wave(), 42, 400000);
  CHECK(std::abs(q1.value - m1.value) <= q1.error_estimate + m1.error_estimate);
}

TEST_CASE("Monte Carlo orders are reproducible and positive") {
  ChaosOrderResult a = chaos_norm_white(3, 1.0, wave(), {}, 7);
  ChaosOrderResult b = chaos_norm_white(3, 1.0, wave(), {}, 7);
  CHECK(a.value == b.value);
  CHECK(a.error_estimate == b.error_estimate);
  CHECK(a.value > 0.0);
  CHECK(a.method == ChaosMethod::MonteCarlo);
}

TEST_CASE("upper bound terms: batch equals single and bound dominates") {
  ValidatedParams p = wave();
  std::vector<double> logs = chaos_norm_upper_bound_logs(6, 2.0, p);
  for (int n = 1; n <= 6; ++n) {
    CHECK(logs[n] == doctest::Approx(chaos_norm_upper_bound_log(n, 2.0, p)).epsilon(1e-12));
  }
  // n = 1: the bound collapses to the exact first-order norm
  CHECK(std::exp(logs[1]) == doctest::Approx(chaos_norm_white(1, 2.0, p).value)
                                 .epsilon(1e-7));
  // n = 2: dominance with slack
  ChaosOrderResult r = chaos_norm_white(2, 2.0, p);
  CHECK(r.value <= std::exp(logs[2]) + r.error_estimate);
}

TEST_CASE("upper bound terms are eventually summable in n") {
  std::vector<double> logs = chaos_norm_upper_bound_logs(120, 4.0, wave());
  CHECK(logs[120] < logs[119]);
  CHECK(logs[120] - logs[119] < -1.0);  // super-geometric decay sets in
}

TEST_CASE("divergence probe verdicts bracket the threshold") {
  DivergenceProbeResult div = second_chaos_divergence_probe(1.6, 0.3, 1.0);
  CHECK(div.verdict == ProbeVerdict::Divergent);
  DivergenceProbeResult conv = second_chaos_divergence_probe(2.0, 0.3, 1.0);
  CHECK(conv.verdict == ProbeVerdict::Convergent);
  CHECK(div.increment_slope > conv.increment_slope);
  // truncated integrals increase with the cutoff
  for (std::size_t i = 0; i < div.increments.size(); ++i) CHECK(div.increments[i] > 0.0);
  for (std::size_t i = 1; i < conv.values.size(); ++i)
    CHECK(conv.values[i] >= conv.values[i - 1]);
}

TEST_CASE("divergence probe input validation") {
  CHECK_THROWS_AS(second_chaos_divergence_probe(2.0, 0.6, 1.0), std::domain_error);
  CHECK_THROWS_AS(second_chaos_divergence_probe(3.5, 0.3, 1.0), std::domain_error);
  CHECK_THROWS_AS(second_chaos_divergence_probe(2.0, 0.3, 1.0, {1.0, 2.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(second_chaos_divergence_probe(2.0, 0.3, 1.0, {4.0, 2.0, 8.0}),
                  std::invalid_argument);
}
