#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "duostego/grammar.hpp"
#include "duostego/lexicon.hpp"
#include "duostego/wav.hpp"

namespace duostego {

// The two intermediates produced by covering.
struct StegoBundle {
    wav::AudioClip stego_audio;
    std::vector<grammar::Sentence> text; // one sentence per embedded chunk
    std::uint64_t seed_used = 0;
};

struct DistortionReport {
    std::uint64_t samples_changed = 0;
    std::uint32_t max_abs_delta = 0;
    double mean_abs_delta = 0.0; // over all samples
    double snr_db = 0.0;         // +inf when identical
};

/// Raw embedding room: three bits per 16-bit sample, before the length header.
std::uint64_t capacity_bits(const wav::AudioClip& clip) noexcept;

/// floor((3 * samples - 32) / 8), or 0 when the header alone does not fit.
std::uint64_t capacity_bytes(const wav::AudioClip& clip) noexcept;

/// Number of sentences (and altered slots) needed for a payload.
std::uint64_t sentences_for_payload(std::size_t payload_bytes) noexcept;

/// Hides `payload` in randomly chosen samples of `carrier` and encodes the
/// chosen coordinates as sentences. Throws CapacityExceeded.
StegoBundle cover(const wav::AudioClip& carrier, std::span<const std::uint8_t> payload,
                  const lexicon::Lexicon& lex, std::uint64_t seed,
                  const grammar::Grammar& g = grammar::Grammar::sentence_grammar());

/// Recovers the payload from the stego audio and the sentence text, given as
/// token lists. No seed is involved. Throws UnknownWord, BadSentenceLength,
/// CoordinateOutOfRange or HeaderCorrupt.
std::vector<std::uint8_t> uncover(const wav::AudioClip& stego_audio,
                                  std::span<const std::vector<std::string>> sentences,
                                  const lexicon::Lexicon& lex);

/// Same, reading sentences straight from text in the on-disk format.
std::vector<std::uint8_t> uncover(const wav::AudioClip& stego_audio, std::string_view text,
                                  const lexicon::Lexicon& lex);

std::vector<std::uint8_t> uncover(const StegoBundle& bundle, const lexicon::Lexicon& lex);

/// Throws LengthMismatch when the clips differ in sample count. SNR uses
/// the samples as signed 16-bit amplitudes.
DistortionReport distortion_report(const wav::AudioClip& original, const wav::AudioClip& stego);

namespace text {

/// One sentence per line, lowercase, tokens joined by single spaces.
std::string format(std::span<const grammar::Sentence> sentences);

/// Splits on any whitespace; blank lines are skipped; case is left to the lexicon.
std::vector<std::vector<std::string>> parse(std::string_view text);

} // namespace text

} // namespace duostego
