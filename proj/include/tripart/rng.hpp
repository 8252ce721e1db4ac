#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace tripart {

/// SplitMix64 finalizer; used to derive independent seeds for substreams.
std::uint64_t splitmix64(std::uint64_t& state);

/// Seedable generator with substreams: Rng(seed, stream) is a 64-bit Mersenne
/// Twister (std::mt19937_64) seeded from SplitMix64(seed) mixed with `stream`.
/// All draws are built directly on raw 64-bit outputs, so sequences are identical
/// on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    bool bernoulli(double p);
    /// Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound);

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace tripart
