#pragma once

#include <cstdint>

namespace gramburst {

// splitmix64. The generator is pinned so that synthetic corpora regenerate
// byte-identically on any platform; corpus metadata records kGeneratorId.
//
// Sampling recipes (also documented in the README):
//   below(b) = next() % b
//   unit()   = (next() >> 11) * 2^-53
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

inline constexpr const char* kGeneratorId = "splitmix64";

}  // namespace gramburst
