#pragma once

#include <vector>

#include "fracwave/moments.hpp"
#include "fracwave/params.hpp"
#include "fracwave/quadrature.hpp"

namespace fracwave {

struct IncrementSample {
  double offset = 0.0;    // h for time, z for space
  double variance = 0.0;
  double quadrature_error = 0.0;
  double part_a = 0.0;  // time: light-cone overlap part; space: full variance
  double part_b = 0.0;  // time: fresh-interval part
};

// First-chaos increment variance in time (white temporal noise):
//   int_0^t int_R |G^_{t+h-s}(xi) - G^_{t-s}(xi)|^2 mu(dxi) ds
// + int_t^{t+h} int_R |G^_{t+h-s}(xi)|^2 mu(dxi) ds.
// Exact power-law pieces are evaluated in closed form (constants by one
// quadrature); the oscillatory correction numerically.
IncrementSample time_increment_variance(double t, double h, const ValidatedParams& p,
                                        const QuadratureSpec& q = {});

// First-chaos increment variance in space:
//   int_0^t int_R sin^2((t-s)|xi|^{k/2})/|xi|^k |1-e^{-iz xi}|^2 |xi|^{1-2H} dxi ds.
IncrementSample space_increment_variance(double t, double z, const ValidatedParams& p,
                                         const QuadratureSpec& q = {});

enum class IncrementKind { Time, Space };

struct HolderVerdict {
  SlopeFit fit;
  double supremum;   // open Holder supremum for the requested kind
  bool consistent;   // |slope/2 - supremum| <= 0.05
};

HolderVerdict holder_verdict(const std::vector<IncrementSample>& samples,
                             IncrementKind kind, const ValidatedParams& p);

}  // namespace fracwave
