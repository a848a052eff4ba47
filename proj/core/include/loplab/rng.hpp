#pragma once

#include <cstdint>
#include <random>

namespace loplab {

// SplitMix64 finalizer. Used for every seed derivation in the library.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Per-trial random stream. The output sequence is a pure function of
// (seed, trial_index): the engine is std::mt19937_64 seeded with
// mix64(seed ^ mix64(trial_index)). Conversions to doubles and bounded
// integers are done here rather than through <random> distributions, whose
// algorithms are implementation-defined.
//
// Not thread-safe; each trial owns its stream.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t trial_index);

  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
  [[nodiscard]] std::uint64_t trial_index() const noexcept { return trial_; }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform();

  // Uniform on (0, 1]; safe to take the logarithm of.
  double uniform_open_zero();

  // Uniform integer in [0, bound); bound must be positive. Unbiased.
  std::uint64_t below(std::uint64_t bound);

  // Independent child stream for a distinct purpose (e.g. detector
  // randomness vs graph generation) of the same trial.
  [[nodiscard]] RngStream fork(std::uint64_t tag) const;

 private:
  std::uint64_t seed_;
  std::uint64_t trial_;
  std::mt19937_64 engine_;
};

}  // namespace loplab
