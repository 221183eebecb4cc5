#pragma once

#include <cstdint>

namespace mhz {

// Counter-based generator: value i of stream `seed` is hash(seed, i), so any
// sample can be computed independently of the others.  Parallel consumers can
// therefore draw disjoint index ranges and still reproduce the exact sequence
// a serial run would produce.  Mixing function is splitmix64 (Steele et al.),
// applied to the (seed, counter) pair.
class counter_rng {
  public:
    explicit counter_rng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t bits(std::uint64_t index) const {
        std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z = z ^ (z >> 31);
        return z;
    }

    // uniform in [0,1)
    double uniform(std::uint64_t index) const {
        return static_cast<double>(bits(index) >> 11) * 0x1.0p-53;
    }

    // uniform in [lo,hi)
    double uniform(std::uint64_t index, double lo, double hi) const {
        return lo + (hi - lo) * uniform(index);
    }

    std::uint64_t seed() const { return seed_; }

  private:
    std::uint64_t seed_;
};

}  // namespace mhz
