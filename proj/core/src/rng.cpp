#include "loplab/rng.hpp"

#include <stdexcept>

namespace loplab {

RngStream::RngStream(std::uint64_t seed, std::uint64_t trial_index)
    : seed_(seed), trial_(trial_index), engine_(mix64(seed ^ mix64(trial_index))) {}

double RngStream::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double RngStream::uniform_open_zero() {
  return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
}

std::uint64_t RngStream::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("RngStream::below: bound must be positive");
  // Rejection on the top multiple of bound.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

RngStream RngStream::fork(std::uint64_t tag) const {
  return RngStream(mix64(seed_ ^ mix64(tag ^ 0x5bd1e995ULL)), trial_);
}

}  // namespace loplab
