#pragma once

#include <cstdint>
#include <string_view>

namespace albert {

// SplitMix64 with the reference constants. Every randomized suite in this
// project draws from one of these, seeded explicitly; there is no wall-clock
// seeding anywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Unbiased draw from [0, n) via rejection.
  uint64_t below(uint64_t n) {
    if (n == 0) return 0;
    uint64_t limit = ~uint64_t(0) - (~uint64_t(0) % n + 1) % n;
    for (;;) {
      uint64_t v = next();
      if (v <= limit) return v % n;
    }
  }

  // Inclusive integer range, lo <= hi.
  int64_t range(int64_t lo, int64_t hi) {
    return lo + int64_t(below(uint64_t(hi - lo + 1)));
  }

 private:
  uint64_t state_;
};

inline uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

// Per-suite seed derivation: suites are independent of each other and of
// their position in the config, so reports stay stable under reordering of
// unrelated suites. Documented in the README.
inline uint64_t derive_seed(uint64_t master, std::string_view label, uint64_t index) {
  SplitMix64 mix(master ^ fnv1a64(label) ^ (0x9E3779B97F4A7C15ull * (index + 1)));
  return mix.next();
}

}  // namespace albert
