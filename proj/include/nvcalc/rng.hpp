#pragma once

#include <cstdint>

namespace nvcalc {

// splitmix64. Used instead of <random> engines/distributions wherever output
// must be bit-identical across platforms and standard library versions.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform-ish value in [0, bound); bound > 0.  The modulo bias is far below
  // anything these desk-scale draws could notice; determinism is the point.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  int bit() { return static_cast<int>(next() >> 63); }

private:
  std::uint64_t state_;
};

}  // namespace nvcalc
