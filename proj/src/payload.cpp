#include "duostego/payload.hpp"

#include <cctype>

#include "duostego/error.hpp"

namespace duostego::payload {

BitString BitString::from_text(std::string_view text) {
    BitString out;
    for (char c : text) {
        if (c == '0' || c == '1')
            out.push_back(c == '1');
        else if (!std::isspace(static_cast<unsigned char>(c)))
            throw Error(ErrorKind::ParseError, std::string("not a bit character: '") + c + "'");
    }
    return out;
}

std::string BitString::to_text() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(b ? '1' : '0');
    return s;
}

BitString bytes_to_bits(std::span<const std::uint8_t> payload) {
    BitString out;
    out.reserve(payload.size() * 8);
    for (std::uint8_t byte : payload)
        for (int bit = 7; bit >= 0; --bit) out.push_back((byte >> bit) & 1);
    return out;
}

std::vector<std::uint8_t> bits_to_bytes(const BitString& bits) {
    if (bits.size() % 8 != 0)
        throw Error(ErrorKind::NotByteAligned, std::to_string(bits.size()) + " bits");
    std::vector<std::uint8_t> out(bits.size() / 8);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
    return out;
}

BitString frame(const BitString& bits) {
    if (bits.size() >= (std::size_t{1} << kHeaderBits))
        throw Error(ErrorKind::Oversize, std::to_string(bits.size()) + " bits do not fit a 32-bit length");
    const auto length = static_cast<std::uint32_t>(bits.size());
    BitString out;
    out.reserve(kHeaderBits + bits.size());
    for (int bit = static_cast<int>(kHeaderBits) - 1; bit >= 0; --bit) out.push_back((length >> bit) & 1);
    for (std::size_t i = 0; i < bits.size(); ++i) out.push_back(bits[i]);
    return out;
}

std::uint32_t read_length_header(const BitString& framed) {
    if (framed.size() < kHeaderBits)
        throw Error(ErrorKind::HeaderCorrupt, "only " + std::to_string(framed.size()) + " bits, header needs 32");
    std::uint32_t length = 0;
    for (std::size_t i = 0; i < kHeaderBits; ++i) length = (length << 1) | (framed[i] ? 1u : 0u);
    return length;
}

BitString unframe(const BitString& framed) {
    const std::uint32_t length = read_length_header(framed);
    if (framed.size() - kHeaderBits != length)
        throw Error(ErrorKind::HeaderCorrupt, "header declares " + std::to_string(length) + " bits, " +
                                                  std::to_string(framed.size() - kHeaderBits) + " present");
    BitString out;
    out.reserve(length);
    for (std::size_t i = kHeaderBits; i < framed.size(); ++i) out.push_back(framed[i]);
    return out;
}

ChunkStream chunk(const BitString& bits) {
    ChunkStream out(chunk_count_for_bits(bits.size()), 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) out[i / kChunkBits] |= static_cast<std::uint8_t>(4u >> (i % kChunkBits));
    return out;
}

BitString unchunk(std::span<const std::uint8_t> chunks, std::size_t bit_length) {
    const std::size_t available = chunks.size() * kChunkBits;
    if (bit_length > available || available - bit_length >= kChunkBits)
        throw Error(ErrorKind::LengthMismatch, std::to_string(chunks.size()) + " chunks cannot hold exactly " +
                                                   std::to_string(bit_length) + " bits");
    BitString out;
    out.reserve(bit_length);
    for (std::size_t i = 0; i < bit_length; ++i) out.push_back((chunks[i / kChunkBits] >> (2 - i % kChunkBits)) & 1);
    return out;
}

} // namespace duostego::payload
