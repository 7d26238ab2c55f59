#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace fracwave {

// splitmix64 finalizer; the basis of all seeding and counter-based streams.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stable 64-bit hash of a label (FNV-1a), for deriving per-task seeds from
// (command, parameter-point index) under one master seed.
inline std::uint64_t hash_label(std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t derive_seed(std::uint64_t master, std::string_view command,
                                 std::uint64_t point_index) {
  return mix64(mix64(master ^ hash_label(command)) + point_index);
}

// Counter-based generator: sample i of stream (key) is a pure function of
// (key, i), so streams are reproducible and partitionable across workers.
class CounterRng {
public:
  explicit CounterRng(std::uint64_t key, std::uint64_t start_counter = 0)
      : key_(key), counter_(start_counter) {}

  std::uint64_t next_u64() { return at(counter_++); }

  std::uint64_t at(std::uint64_t counter) const {
    return mix64(mix64(key_ ^ 0x2545f4914f6cdd1dULL) + counter);
  }

  // uniform in (0,1)
  double uniform() {
    return ((next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // standard normal (Box-Muller, consumes two uniforms)
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  // standard Cauchy
  double cauchy() {
    return std::tan(3.1415926535897932384626433832795 * (uniform() - 0.5));
  }

  // Exp(1)
  double exponential() { return -std::log(uniform()); }

  std::uint64_t counter() const { return counter_; }

private:
  std::uint64_t key_;
  std::uint64_t counter_;
};

}  // namespace fracwave
