#pragma once

#include <cstdint>

namespace renyi {

// Counter-based generator: draw i of stream s is a SplitMix64 finalizer of
// (key(seed, s) + i * golden_gamma). Streams are independent of the order
// in which they are consumed, which keeps parallel and serial runs identical.
class CounterRng {
public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();

  // Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform();

  // Standard normal via Box-Muller; the second variate is cached.
  double normal();

  std::uint64_t counter() const noexcept { return counter_; }

private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t splitmix64_mix(std::uint64_t z);

}  // namespace renyi
