#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

// The carrier's samples laid out row-major on a near-square grid, plus the
// 3-LSB embedding primitives.
namespace duostego::grid {

struct GridGeometry {
    std::uint64_t total_samples = 0; // N
    std::uint64_t width = 0;         // W = ceil(sqrt(N))
    std::uint64_t height = 0;        // H = ceil(N / W)
    unsigned digit_width = 1;        // decimal digits of max(W - 1, H - 1)

    bool operator==(const GridGeometry&) const = default;
};

// x is the row, y the column.
struct Coordinate {
    std::uint64_t x = 0;
    std::uint64_t y = 0;

    bool operator==(const Coordinate&) const = default;
};

/// Throws ZeroSamples for n == 0.
GridGeometry geometry(std::uint64_t n);

/// Throws OutOfRange for i >= N.
Coordinate index_to_coord(const GridGeometry& g, std::uint64_t i);

/// Throws OutOfRange when the coordinate is off the grid or past the last sample.
std::uint64_t coord_to_index(const GridGeometry& g, Coordinate c);

/// m distinct indices in [0, n), in embedding order.
///
/// The order is a partial Fisher-Yates shuffle of 0..n-1 driven by
/// std::mt19937_64 seeded with `seed`; step i swaps slot i with slot
/// i + uniform_below(n - i). Throws CapacityExceeded when m > n.
std::vector<std::uint64_t> select_samples(std::uint64_t n, std::uint64_t m, std::uint64_t seed);

/// Keeps the upper 13 bits of the sample and writes the chunk into the lower 3.
constexpr std::uint16_t embed_chunk(std::uint16_t sample, std::uint8_t chunk) noexcept {
    return static_cast<std::uint16_t>((sample & 0xFFF8u) | (chunk & 0x7u));
}

constexpr std::uint8_t extract_chunk(std::uint16_t sample) noexcept {
    return static_cast<std::uint8_t>(sample & 0x7u);
}

} // namespace duostego::grid
