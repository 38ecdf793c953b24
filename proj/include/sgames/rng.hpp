#pragma once

#include <cstdint>

namespace sgames {

// splitmix64. Sampling goes through this tiny generator instead of
// <random> distributions so reports are byte-identical across platforms,
// and so parallel sweeps can seed one generator per work item.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
  int bit() { return static_cast<int>(next() & 1); }

 private:
  std::uint64_t state_;
};

}  // namespace sgames
