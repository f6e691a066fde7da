#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

// Payload bytes <-> bit strings <-> 3-bit chunks.
namespace duostego::payload {

inline constexpr std::size_t kHeaderBits = 32;
inline constexpr unsigned kChunkBits = 3;

// Ordered bits, one per element (0 or 1). Bytes expand MSB-first.
class BitString {
public:
    BitString() = default;

    /// Builds from a string of '0'/'1' characters; whitespace is skipped.
    static BitString from_text(std::string_view text);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    bool operator[](std::size_t i) const { return bits_[i] != 0; }

    void push_back(bool bit) { bits_.push_back(bit ? 1 : 0); }
    void reserve(std::size_t n) { bits_.reserve(n); }

    std::string to_text() const;

    bool operator==(const BitString&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

// Chunk values, each in [0, 7].
using ChunkStream = std::vector<std::uint8_t>;

BitString bytes_to_bits(std::span<const std::uint8_t> payload);

/// Throws NotByteAligned unless the length is a multiple of 8.
std::vector<std::uint8_t> bits_to_bytes(const BitString& bits);

/// Prepends the bit length as a 32-bit big-endian field. Throws Oversize at 2^32 bits.
BitString frame(const BitString& bits);

/// Strips and checks the length header. Throws HeaderCorrupt when the input
/// is shorter than the header or the declared length differs from what follows.
BitString unframe(const BitString& framed);

/// Reads the 32-bit header without checking what follows it.
std::uint32_t read_length_header(const BitString& framed);

/// Groups bits in threes; a trailing partial group is zero-padded on the right.
ChunkStream chunk(const BitString& bits);

/// Concatenates chunks and truncates to bit_length. Throws LengthMismatch
/// unless 3 * chunks.size() - bit_length is 0, 1 or 2.
BitString unchunk(std::span<const std::uint8_t> chunks, std::size_t bit_length);

constexpr std::size_t chunk_count_for_bits(std::size_t bits) noexcept {
    return (bits + kChunkBits - 1) / kChunkBits;
}

} // namespace duostego::payload
