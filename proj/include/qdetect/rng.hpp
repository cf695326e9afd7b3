#pragma once

#include <cstdint>

namespace qdetect {

/// Stateless counter-based generator: every variate is a pure function of
/// (seed, counter, stream), so trial partitioning across threads cannot
/// change the sampled values.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t bits(std::uint64_t counter, std::uint64_t stream) const {
        std::uint64_t z = mix(seed_ ^ mix(counter));
        return mix(z ^ (stream * 0xd1342543de82ef95ULL));
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform(std::uint64_t counter, std::uint64_t stream) const {
        return static_cast<double>(bits(counter, stream) >> 11) * 0x1.0p-53;
    }

    /// Derives an independent seed for a sub-stream (one per grid point).
    std::uint64_t derive(std::uint64_t index) const {
        return mix(seed_ + 0x9e3779b97f4a7c15ULL * (index + 1));
    }

private:
    // splitmix64 finalizer
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
};

}  // namespace qdetect
