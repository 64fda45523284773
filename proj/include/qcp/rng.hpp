#pragma once

#include <cstdint>
#include <random>

namespace qcp {

/// SplitMix64 finalizer. Used to turn (master seed, counter) pairs into
/// well-separated engine seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Uniform [0,1) source consumed by all randomized operations. One stream per
/// trial; streams are never shared between trials.
class RandomStream {
 public:
  virtual ~RandomStream() = default;
  virtual double next_unit() = 0;
};

/// mt19937_64-backed stream. Doubles are built from the top 53 bits of the raw
/// output so the bit pattern is identical on every platform.
class SeededStream final : public RandomStream {
 public:
  explicit SeededStream(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  /// Counter-based child stream: trial t of a run with the given master seed.
  static SeededStream for_trial(std::uint64_t master_seed, std::uint64_t trial) {
    return SeededStream(master_seed ^ splitmix64(trial + 1));
  }

  double next_unit() override {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

/// Test double: always returns the same value.
class ConstantStream final : public RandomStream {
 public:
  explicit ConstantStream(double value) : value_(value) {}
  double next_unit() override { return value_; }

 private:
  double value_;
};

}  // namespace qcp
