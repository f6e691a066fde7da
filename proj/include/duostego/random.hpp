#pragma once

#include <cstdint>
#include <random>

// Portable seeded randomness. std::mt19937_64 output is fixed by the
// standard, but the <random> distributions are not, so bounded draws are
// done here by rejection sampling.
namespace duostego::rng {

using Engine = std::mt19937_64;

/// Uniform integer in [0, bound). bound must be nonzero.
inline std::uint64_t uniform_below(Engine& engine, std::uint64_t bound) {
    // 2^64 mod bound; values below it would bias the modulo.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = engine();
        if (r >= threshold) return r % bound;
    }
}

/// SplitMix64 finalizer, used to derive independent sub-seeds.
constexpr std::uint64_t mix(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Seed from the system entropy source.
inline std::uint64_t entropy_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

} // namespace duostego::rng
