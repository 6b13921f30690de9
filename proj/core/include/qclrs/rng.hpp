#ifndef QCLRS_RNG_HPP_
#define QCLRS_RNG_HPP_

#include <cstdint>

namespace qclrs {

// SplitMix64. Each (seed, stream) pair derives an independent deterministic
// stream, so work split across threads by stream index reproduces the serial
// result bit for bit.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(mix(seed ^ (0x9E3779B97F4A7C15ull * (stream + 1)))) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace qclrs

#endif  // QCLRS_RNG_HPP_
