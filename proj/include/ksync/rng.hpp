#pragma once

#include <cstdint>

namespace ksync {

/// SplitMix64 (Steele, Lea & Flood, "Fast splittable pseudorandom number
/// generators"; the java.util.SplittableRandom mixer).
///
/// Chosen over the <random> engines because the whole state is one word,
/// substreams are cheap to derive, and the output sequence is identical on
/// every platform -- std::uniform_*_distribution is implementation-defined,
/// which would break byte-identical experiment reruns across toolchains.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform draw from the open interval (0,1): 53-bit mantissa with a
    /// half-ulp offset, so neither endpoint is ever returned.
    double uniform01() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1p-53;
    }

    /// Uniform draw from the open interval (a,b).
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// Unbiased integer in [0, bound), bound >= 1. Rejection sampling.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_;
};

/// SplitMix64 finalizer, usable as a stand-alone 64-bit mixing function.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Substream derivation rule: the generator for substream (a, b) of a master
/// seed is SplitMix64(stream_seed(master, a, b)). Workers that process
/// samples in any order therefore reproduce the serial results exactly.
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b) {
    std::uint64_t s = mix64(master + 0x9e3779b97f4a7c15ull);
    s = mix64(s ^ (a + 0x9e3779b97f4a7c15ull));
    s = mix64(s ^ (b + 0x3c6ef372fe94f82aull));
    return s;
}

}  // namespace ksync
