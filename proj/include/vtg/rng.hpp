#pragma once
// Deterministic 64-bit RNG (splitmix64). One fixed algorithm everywhere so
// every sampled result is reproducible bit-exactly from its seed.

#include <cstdint>

namespace vtg {

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) by rejection; n must be positive.
  uint64_t below(uint64_t n) {
    uint64_t limit = ~0ull - ~0ull % n;
    uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

 private:
  uint64_t state_;
};

}  // namespace vtg
