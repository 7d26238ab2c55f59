#pragma once

#include <vector>

#include "fracwave/params.hpp"

namespace fracwave {

// Multi-index alpha in {0,1,2}^n from expanding x_1 prod_{j=2}^n (x_j + x_{j-1}).
struct AlphaIndex {
  std::vector<int> entries;

  int order() const { return static_cast<int>(entries.size()); }
  bool valid() const;
};

// The full index set A_n (cardinality 2^{n-1}); n is capped at 25.
std::vector<AlphaIndex> alpha_index_set(int n);

struct BetaExponents {
  std::vector<double> betas;  // beta_j = [2 - 2/kappa - (2/kappa) alpha_j (1-2H)] / (2 H0)
  double total;
};

BetaExponents beta_exponents(const AlphaIndex& alpha, const ValidatedParams& p);

// beta_j as a function of the single letter a in {0,1,2}.
double beta_of_letter(int a, const ModelParams& p);

// log of sum over alpha in A_n of prod_j w(alpha_j), for n = 1..n_max in one
// transfer pass; log_w[a] is log w(a). Exact (no enumeration), usable far past
// the enumeration cap.
std::vector<double> alpha_weight_log_sums(int n_max, const double log_w[3]);

}  // namespace fracwave
