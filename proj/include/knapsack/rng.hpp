#pragma once

#include <cstdint>

namespace knapsack {

// Counter-keyed splitmix64 stream. A stream is fully determined by
// (seed, stream_id), so Monte Carlo trials can each own an independent,
// reproducible generator regardless of how work is split across threads.
class Rng {
  public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(mix(seed + 0x9e3779b97f4a7c15ull * (stream + 1))) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    // Uniform draw in the open interval (0,1); safe to feed into quantile
    // transforms with endpoint singularities.
    double uniform01() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace knapsack
