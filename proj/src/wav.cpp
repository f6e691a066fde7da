#include "duostego/wav.hpp"

#include <algorithm>
#include <cstring>
#include <optional>
#include <string>

#include "duostego/error.hpp"

namespace duostego::wav {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::size_t kChunkHeaderSize = 8;

std::uint16_t read_u16(std::span<const std::uint8_t> b, std::size_t at) {
    return static_cast<std::uint16_t>(b[at] | (b[at + 1] << 8));
}

std::uint32_t read_u32(std::span<const std::uint8_t> b, std::size_t at) {
    return static_cast<std::uint32_t>(b[at]) | (static_cast<std::uint32_t>(b[at + 1]) << 8) |
           (static_cast<std::uint32_t>(b[at + 2]) << 16) |
           (static_cast<std::uint32_t>(b[at + 3]) << 24);
}

bool tag_is(std::span<const std::uint8_t> b, std::size_t at, const char* tag) {
    return std::memcmp(b.data() + at, tag, 4) == 0;
}

class ByteWriter {
public:
    explicit ByteWriter(std::size_t reserve) { out_.reserve(reserve); }

    void tag(const char* t) { out_.insert(out_.end(), t, t + 4); }
    void tag(const std::array<char, 4>& t) { out_.insert(out_.end(), t.begin(), t.end()); }
    void u16(std::uint16_t v) {
        out_.push_back(static_cast<std::uint8_t>(v & 0xFF));
        out_.push_back(static_cast<std::uint8_t>(v >> 8));
    }
    void u32(std::uint32_t v) {
        for (int shift = 0; shift < 32; shift += 8)
            out_.push_back(static_cast<std::uint8_t>((v >> shift) & 0xFF));
    }
    void bytes(std::span<const std::uint8_t> b) { out_.insert(out_.end(), b.begin(), b.end()); }
    void pad_if_odd(std::size_t len) {
        if (len % 2 != 0) out_.push_back(0);
    }

    std::vector<std::uint8_t> take() && { return std::move(out_); }

private:
    std::vector<std::uint8_t> out_;
};

struct FormatInfo {
    std::uint16_t channels;
    std::uint32_t sample_rate;
};

FormatInfo parse_fmt(std::span<const std::uint8_t> body) {
    if (body.size() < 16) throw Error(ErrorKind::Malformed, "fmt chunk shorter than 16 bytes");
    const std::uint16_t tag = read_u16(body, 0);
    const std::uint16_t channels = read_u16(body, 2);
    const std::uint32_t rate = read_u32(body, 4);
    const std::uint16_t bits = read_u16(body, 14);
    if (tag != kFormatPcm)
        throw Error(ErrorKind::UnsupportedCodec, "format tag " + std::to_string(tag) + ", expected 1 (PCM)");
    if (bits != 16)
        throw Error(ErrorKind::UnsupportedDepth, std::to_string(bits) + " bits per sample, expected 16");
    if (channels == 0) throw Error(ErrorKind::Malformed, "zero channels");
    if (rate == 0) throw Error(ErrorKind::Malformed, "zero sample rate");
    return {channels, rate};
}

} // namespace

AudioClip parse_wav(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 12 || !tag_is(bytes, 0, "RIFF") || !tag_is(bytes, 8, "WAVE"))
        throw Error(ErrorKind::NotRiff, "missing RIFF/WAVE magic");

    const std::uint64_t riff_end = 8ull + read_u32(bytes, 4);
    if (riff_end > bytes.size())
        throw Error(ErrorKind::Truncated, "RIFF size " + std::to_string(riff_end) +
                                              " exceeds file size " + std::to_string(bytes.size()));

    AudioClip clip;
    std::optional<FormatInfo> format;
    bool have_data = false;

    std::size_t pos = 12;
    while (pos < riff_end) {
        if (riff_end - pos < kChunkHeaderSize) throw Error(ErrorKind::Truncated, "partial chunk header");
        const std::uint32_t size = read_u32(bytes, pos + 4);
        const std::size_t body_at = pos + kChunkHeaderSize;
        if (size > riff_end - body_at)
            throw Error(ErrorKind::Truncated, "chunk body of " + std::to_string(size) + " bytes overruns file");
        const auto body = bytes.subspan(body_at, size);

        if (tag_is(bytes, pos, "fmt ")) {
            if (format) throw Error(ErrorKind::Malformed, "duplicate fmt chunk");
            format = parse_fmt(body);
        } else if (tag_is(bytes, pos, "data")) {
            if (have_data) throw Error(ErrorKind::Malformed, "duplicate data chunk");
            if (size % 2 != 0) throw Error(ErrorKind::Malformed, "odd data chunk length for 16-bit samples");
            clip.samples.resize(size / 2);
            for (std::size_t i = 0; i < clip.samples.size(); ++i) clip.samples[i] = read_u16(body, 2 * i);
            have_data = true;
        } else {
            RiffChunk chunk;
            std::memcpy(chunk.id.data(), bytes.data() + pos, 4);
            chunk.body.assign(body.begin(), body.end());
            clip.trailing_chunks.push_back(std::move(chunk));
        }

        // A missing final pad byte is tolerated.
        pos = body_at + size + (size % 2);
    }

    if (!format) throw Error(ErrorKind::Malformed, "no fmt chunk");
    if (!have_data) throw Error(ErrorKind::Malformed, "no data chunk");
    clip.channel_count = format->channels;
    clip.sample_rate = format->sample_rate;
    return clip;
}

std::vector<std::uint8_t> write_wav(const AudioClip& clip) {
    const std::uint32_t data_size = static_cast<std::uint32_t>(clip.samples.size() * 2);
    std::size_t extra = 0;
    for (const auto& c : clip.trailing_chunks) extra += kChunkHeaderSize + c.body.size() + c.body.size() % 2;
    const std::size_t total = 44 + data_size + extra;

    const std::uint16_t block_align = static_cast<std::uint16_t>(clip.channel_count * 2);
    ByteWriter w(total);
    w.tag("RIFF");
    w.u32(static_cast<std::uint32_t>(total - 8));
    w.tag("WAVE");
    w.tag("fmt ");
    w.u32(16);
    w.u16(kFormatPcm);
    w.u16(clip.channel_count);
    w.u32(clip.sample_rate);
    w.u32(clip.sample_rate * block_align);
    w.u16(block_align);
    w.u16(16);
    w.tag("data");
    w.u32(data_size);
    for (std::uint16_t s : clip.samples) w.u16(s);
    for (const auto& c : clip.trailing_chunks) {
        w.tag(c.id);
        w.u32(static_cast<std::uint32_t>(c.body.size()));
        w.bytes(c.body);
        w.pad_if_odd(c.body.size());
    }
    return std::move(w).take();
}

} // namespace duostego::wav
