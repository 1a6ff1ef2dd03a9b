#pragma once

#include <cstdint>

namespace concordia {

/// Counter-based deterministic generator.
///
/// The seed-to-stream map is fixed for a given version of this library:
///
///   value(seed, k) = mix64(seed + (k + 1) * 0x9E3779B97F4A7C15)
///
/// where mix64 is the splitmix64 finalizer. Streams for different seeds or
/// counters are independent for practical purposes, any counter can be
/// evaluated without stepping through its predecessors, and results are
/// reproducible bit for bit across runs and thread layouts.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t start = 0)
      : seed_(seed), counter_(start) {}

  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static std::uint64_t value(std::uint64_t seed, std::uint64_t counter) {
    return mix64(seed + (counter + 1) * 0x9E3779B97F4A7C15ULL);
  }

  std::uint64_t next_u64() { return value(seed_, counter_++); }

  /// Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

}  // namespace concordia
