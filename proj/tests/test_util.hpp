#pragma once

#include <cstdint>

namespace sacf::testutil {

// Counter-based splitmix64: value k of stream `seed`.
inline std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t k) {
    std::uint64_t z = seed + (k + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed) {}
    std::uint64_t next() { return splitmix64(seed_, counter_++); }
    // uniform in [lo, hi]
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    double uniform() { return (next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace sacf::testutil
