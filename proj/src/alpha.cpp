#include "fracwave/alpha.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace fracwave {

bool AlphaIndex::valid() const {
  const int n = order();
  if (n < 1) return false;
  for (int e : entries)
    if (e < 0 || e > 2) return false;
  if (entries.front() != 1 && entries.front() != 2) return false;
  if (entries.back() != 0 && entries.back() != 1) return false;
  if (std::accumulate(entries.begin(), entries.end(), 0) != n) return false;
  for (int j = 0; j + 1 < n; ++j) {
    const int s = entries[j] + entries[j + 1];
    if (s < 1 || s > 3) return false;
  }
  return true;
}

std::vector<AlphaIndex> alpha_index_set(int n) {
  if (n < 1) throw std::domain_error("alpha_index_set requires n >= 1");
  if (n > 25) throw std::length_error("alpha_index_set capped at n = 25 (set size 2^{n-1})");
  std::vector<AlphaIndex> out;
  out.reserve(std::size_t{1} << (n - 1));
  // each factor (x_j + x_{j-1}), j = 2..n, contributes its degree to slot j or j-1
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    AlphaIndex a;
    a.entries.assign(n, 0);
    a.entries[0] = 1;
    for (int j = 2; j <= n; ++j) {
      if (mask & (std::uint64_t{1} << (j - 2)))
        a.entries[j - 2] += 1;
      else
        a.entries[j - 1] += 1;
    }
    out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end(),
            [](const AlphaIndex& x, const AlphaIndex& y) { return x.entries < y.entries; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const AlphaIndex& x, const AlphaIndex& y) {
                          return x.entries == y.entries;
                        }),
            out.end());
  return out;
}

double beta_of_letter(int a, const ModelParams& p) {
  const double k = p.kappa;
  return (2.0 - 2.0 / k - (2.0 / k) * a * (1.0 - 2.0 * p.hurst_space)) /
         (2.0 * p.hurst_time);
}

BetaExponents beta_exponents(const AlphaIndex& alpha, const ValidatedParams& p) {
  BetaExponents b;
  b.betas.reserve(alpha.entries.size());
  double total = 0.0;
  for (int a : alpha.entries) {
    const double bj = beta_of_letter(a, p.params);
    b.betas.push_back(bj);
    total += bj;
  }
  b.total = total;
  return b;
}

static double log_add(double x, double y) {
  if (x == -std::numeric_limits<double>::infinity()) return y;
  if (y == -std::numeric_limits<double>::infinity()) return x;
  const double m = std::max(x, y);
  return m + std::log1p(std::exp(std::min(x, y) - m));
}

std::vector<double> alpha_weight_log_sums(int n_max, const double log_w[3]) {
  if (n_max < 1) throw std::domain_error("alpha_weight_log_sums requires n_max >= 1");
  const double ninf = -std::numeric_limits<double>::infinity();
  // Indices in the set biject with bit strings b_1..b_{n-1} (slot choices of the
  // factors x_j + x_{j-1}), with b_0 = b_n = 0 and letter a_m = 1 + b_m - b_{m-1}.
  // dp[b] is the log-sum of prefix weights with current bit b.
  double dp[2] = {log_w[1], log_w[2]};
  std::vector<double> result(n_max + 1, ninf);
  result[1] = dp[0];  // b_1 = 0 forced when n = 1
  for (int m = 2; m <= n_max; ++m) {
    double nd[2] = {ninf, ninf};
    for (int prev : {0, 1})
      for (int cur : {0, 1})
        nd[cur] = log_add(nd[cur], dp[prev] + log_w[1 + cur - prev]);
    dp[0] = nd[0];
    dp[1] = nd[1];
    result[m] = dp[0];  // b_m = 0 forced at the last letter
  }
  return result;  // result[n], n = 1..n_max; result[0] unused (-inf)
}

}  // namespace fracwave
