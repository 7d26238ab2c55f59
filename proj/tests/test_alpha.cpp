#include <doctest.h>

#include <cmath>
#include <vector>

#include "fracwave/alpha.hpp"
#include "fracwave/rng.hpp"

using namespace fracwave;

TEST_CASE("index set cardinality is 2^{n-1}") {
  for (int n = 1; n <= 12; ++n) {
    CHECK(alpha_index_set(n).size() == (std::size_t(1) << (n - 1)));
  }
  CHECK_THROWS(alpha_index_set(0));
  CHECK_THROWS(alpha_index_set(26));
}

TEST_CASE("every index satisfies the structural constraints") {
  for (int n = 1; n <= 8; ++n) {
    for (const AlphaIndex& a : alpha_index_set(n)) {
      CHECK(a.valid());
      int total = 0;
      for (int v : a.entries) total += v;
      CHECK(total == n);
      if (n >= 2) {
        CHECK(a.entries.front() >= 1);
        CHECK(a.entries.back() <= 1);
        for (int j = 1; j < n; ++j) {
          const int pair = a.entries[j] + a.entries[j - 1];
          CHECK(pair >= 1);
          CHECK(pair <= 3);
        }
      }
    }
  }
}

TEST_CASE("generating identity x1 prod (xj + x_{j-1})") {
  CounterRng rng(1234);
  for (int n = 1; n <= 6; ++n) {
    std::vector<AlphaIndex> idx = alpha_index_set(n);
    for (int rep = 0; rep < 10000; ++rep) {
      std::vector<double> x(n);
      for (double& v : x) v = 0.1 + 2.0 * rng.uniform();
      double lhs = x[0];
      for (int j = 1; j < n; ++j) lhs *= x[j] + x[j - 1];
      double rhs = 0.0;
      for (const AlphaIndex& a : idx) {
        double term = 1.0;
        for (int j = 0; j < n; ++j) term *= std::pow(x[j], a.entries[j]);
        rhs += term;
      }
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
    }
  }
}

TEST_CASE("beta exponents") {
  ModelParams mp{2.0, 0.3, 0.5, TemporalKind::White};
  ValidatedParams vp = validate_params(mp);
  // beta(a) = [2 - 2/k - (2/k) a (1-2H)] / (2 H0); k=2, H=0.3, H0=1/2
  CHECK(beta_of_letter(0, mp) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(beta_of_letter(1, mp) == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(beta_of_letter(2, mp) == doctest::Approx(0.2).epsilon(1e-14));
  for (const AlphaIndex& a : alpha_index_set(5)) {
    BetaExponents b = beta_exponents(a, vp);
    double total = 0.0;
    for (double v : b.betas) total += v;
    CHECK(b.total == doctest::Approx(total).epsilon(1e-13));
    // sum of alpha_j = n makes the total collapse to n * beta(1)
    CHECK(b.total == doctest::Approx(5.0 * 0.6).epsilon(1e-12));
  }
}

TEST_CASE("transfer recursion matches explicit enumeration") {
  const double log_w[3] = {std::log(0.7), std::log(1.3), std::log(2.2)};
  std::vector<double> got = alpha_weight_log_sums(12, log_w);
  for (int n = 1; n <= 12; ++n) {
    double sum = 0.0;
    for (const AlphaIndex& a : alpha_index_set(n)) {
      double lw = 0.0;
      for (int v : a.entries) lw += log_w[v];
      sum += std::exp(lw);
    }
    CHECK(got[n] == doctest::Approx(std::log(sum)).epsilon(1e-12));
  }
}
