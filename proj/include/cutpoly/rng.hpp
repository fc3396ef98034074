#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace cutpoly {

/// Seeded generator shared by every randomised routine.
///
/// State is a 64-bit LCG, x' = 6364136223846793005 * x + 1442695040888963407
/// (mod 2^64); each 32-bit draw is the high half of the new state. Bounded
/// draws use rejection sampling, so streams are reproducible across
/// platforms, which std distributions do not guarantee.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint32_t next32() { return static_cast<std::uint32_t>(engine_() >> 32); }
    std::uint64_t next64() {
        const std::uint64_t hi = next32();
        return (hi << 32) | next32();
    }

    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            const std::uint64_t r = next64();
            if (r >= threshold)
                return r % bound;
        }
    }

    /// Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool chance(std::uint32_t numerator, std::uint32_t denominator) { return below(denominator) < numerator; }

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0> engine_;
};

} // namespace cutpoly
