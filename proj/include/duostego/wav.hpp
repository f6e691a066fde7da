#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

// Reading and writing of 16-bit integer PCM RIFF/WAVE files.
namespace duostego::wav {

// A RIFF chunk that is neither "fmt " nor "data", kept byte-for-byte.
struct RiffChunk {
    std::array<char, 4> id{};
    std::vector<std::uint8_t> body;

    bool operator==(const RiffChunk&) const = default;
};

// Decoded carrier. Samples are opaque 16-bit patterns in file interleave
// order; every channel's sample is its own slot.
struct AudioClip {
    std::uint32_t sample_rate = 44100;
    std::uint16_t channel_count = 1;
    std::vector<std::uint16_t> samples;
    std::vector<RiffChunk> trailing_chunks;

    bool operator==(const AudioClip&) const = default;
};

/// Parses a RIFF/WAVE byte stream. Only format tag 1 at 16 bits per sample
/// is accepted. Chunks other than "fmt " and "data" are kept, in order, as
/// trailing chunks.
AudioClip parse_wav(std::span<const std::uint8_t> bytes);

/// Emits header, 16-byte PCM fmt chunk, data chunk, then the trailing
/// chunks. Odd-length chunk bodies get one pad byte.
std::vector<std::uint8_t> write_wav(const AudioClip& clip);

inline std::size_t sample_count(const AudioClip& clip) noexcept { return clip.samples.size(); }

} // namespace duostego::wav
