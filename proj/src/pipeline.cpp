#include "duostego/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "duostego/error.hpp"
#include "duostego/payload.hpp"
#include "duostego/random.hpp"
#include "duostego/sample_grid.hpp"

namespace duostego {
namespace {

// Writes `value` as exactly `width` decimal digits, most significant first.
void push_digits(std::vector<std::uint8_t>& out, std::uint64_t value, unsigned width) {
    const std::size_t base = out.size();
    out.resize(base + width);
    for (unsigned i = width; i-- > 0;) {
        out[base + i] = static_cast<std::uint8_t>(value % 10);
        value /= 10;
    }
}

std::uint64_t read_digits(std::span<const std::uint8_t> digits) {
    std::uint64_t v = 0;
    for (auto d : digits) v = v * 10 + d;
    return v;
}


constexpr std::string_view kBlank = " \t\r\f\v";

// Splits one line into whitespace-separated tokens.
void split_words(std::string_view line, std::vector<std::string_view>& words) {
    words.clear();
    for (auto start = line.find_first_not_of(kBlank); start != std::string_view::npos;
         start = line.find_first_not_of(kBlank, start)) {
        const auto stop = std::min(line.find_first_of(kBlank, start), line.size());
        words.push_back(line.substr(start, stop - start));
        start = stop;
    }
}

// Turns sentences into chunks one at a time, then reassembles the payload.
class Extractor {
public:
    Extractor(const wav::AudioClip& audio, const lexicon::Lexicon& lex)
        : audio_(audio), lex_(lex), geo_(grid::geometry(audio.samples.size())), digits_(2 * geo_.digit_width) {}

    void add(std::span<const std::string_view> words) {
        const std::size_t t = chunks_.size();
        if (words.size() != digits_.size())
            throw Error(ErrorKind::BadSentenceLength, "sentence " + std::to_string(t) + " has " +
                                                          std::to_string(words.size()) + " words, expected " +
                                                          std::to_string(digits_.size()));
        for (std::size_t i = 0; i < words.size(); ++i) {
            const auto d = lex_.find_digit(words[i]);
            if (!d)
                throw Error(ErrorKind::UnknownWord, "'" + std::string(words[i]) + "' at sentence " +
                                                        std::to_string(t) + ", position " + std::to_string(i) +
                                                        " is not in the lexicon");
            digits_[i] = static_cast<std::uint8_t>(*d);
        }
        const std::span<const std::uint8_t> all(digits_);
        const grid::Coordinate c{read_digits(all.first(geo_.digit_width)), read_digits(all.last(geo_.digit_width))};
        std::uint64_t index = 0;
        try {
            index = grid::coord_to_index(geo_, c);
        } catch (const Error& e) {
            throw Error(ErrorKind::CoordinateOutOfRange, "sentence " + std::to_string(t) + ": " + e.what());
        }
        chunks_.push_back(grid::extract_chunk(audio_.samples[index]));
    }

    std::vector<std::uint8_t> finish() const {
        const std::size_t available = chunks_.size() * payload::kChunkBits;
        if (available < payload::kHeaderBits)
            throw Error(ErrorKind::HeaderCorrupt,
                        std::to_string(chunks_.size()) + " sentences cannot hold the length header");
        const auto head = payload::unchunk(
            std::span(chunks_).first(payload::chunk_count_for_bits(payload::kHeaderBits)), payload::kHeaderBits);
        const std::uint64_t declared = payload::read_length_header(head);
        const std::uint64_t framed_bits = declared + payload::kHeaderBits;
        if (declared % 8 != 0 || payload::chunk_count_for_bits(framed_bits) != chunks_.size())
            throw Error(ErrorKind::HeaderCorrupt, "header declares " + std::to_string(declared) +
                                                      " payload bits but " + std::to_string(chunks_.size()) +
                                                      " sentences were supplied");
        return payload::bits_to_bytes(payload::unframe(payload::unchunk(chunks_, framed_bits)));
    }

private:
    const wav::AudioClip& audio_;
    const lexicon::Lexicon& lex_;
    grid::GridGeometry geo_;
    std::vector<std::uint8_t> digits_;
    payload::ChunkStream chunks_;
};

} // namespace

std::uint64_t capacity_bits(const wav::AudioClip& clip) noexcept {
    return payload::kChunkBits * static_cast<std::uint64_t>(wav::sample_count(clip));
}

std::uint64_t capacity_bytes(const wav::AudioClip& clip) noexcept {
    const std::uint64_t bits = capacity_bits(clip);
    if (bits < payload::kHeaderBits) return 0;
    return (bits - payload::kHeaderBits) / 8;
}

std::uint64_t sentences_for_payload(std::size_t payload_bytes) noexcept {
    return payload::chunk_count_for_bits(8 * static_cast<std::uint64_t>(payload_bytes) + payload::kHeaderBits);
}

StegoBundle cover(const wav::AudioClip& carrier, std::span<const std::uint8_t> payload_bytes,
                  const lexicon::Lexicon& lex, std::uint64_t seed, const grammar::Grammar& g) {
    const std::uint64_t capacity = capacity_bytes(carrier);
    if (payload_bytes.size() > capacity)
        throw Error(ErrorKind::CapacityExceeded, std::to_string(payload_bytes.size()) + " bytes exceed capacity of " +
                                                     std::to_string(capacity) + " bytes");

    const auto chunks = payload::chunk(payload::frame(payload::bytes_to_bits(payload_bytes)));
    const auto geo = grid::geometry(carrier.samples.size());
    const auto slots = grid::select_samples(geo.total_samples, chunks.size(), seed);

    StegoBundle bundle;
    bundle.seed_used = seed;
    bundle.stego_audio = carrier;
    bundle.text.reserve(slots.size());

    // Sentence wording draws from its own stream, separate from slot selection.
    rng::Engine wording(rng::mix(seed));
    std::vector<std::uint8_t> digits;
    digits.reserve(2 * geo.digit_width);
    for (std::size_t t = 0; t < slots.size(); ++t) {
        auto& sample = bundle.stego_audio.samples[slots[t]];
        sample = grid::embed_chunk(sample, chunks[t]);

        const auto c = grid::index_to_coord(geo, slots[t]);
        digits.clear();
        push_digits(digits, c.x, geo.digit_width);
        push_digits(digits, c.y, geo.digit_width);
        bundle.text.push_back(grammar::generate_sentence(g, lex, digits, wording));
    }
    return bundle;
}

std::vector<std::uint8_t> uncover(const wav::AudioClip& stego_audio,
                                  std::span<const std::vector<std::string>> sentences,
                                  const lexicon::Lexicon& lex) {
    Extractor extractor(stego_audio, lex);
    std::vector<std::string_view> words;
    for (const auto& sentence : sentences) {
        words.assign(sentence.begin(), sentence.end());
        extractor.add(words);
    }
    return extractor.finish();
}

std::vector<std::uint8_t> uncover(const wav::AudioClip& stego_audio, std::string_view text,
                                  const lexicon::Lexicon& lex) {
    Extractor extractor(stego_audio, lex);
    std::vector<std::string_view> words;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        split_words(text.substr(0, eol), words);
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
        if (!words.empty()) extractor.add(words);
    }
    return extractor.finish();
}

std::vector<std::uint8_t> uncover(const StegoBundle& bundle, const lexicon::Lexicon& lex) {
    std::vector<std::vector<std::string>> sentences;
    sentences.reserve(bundle.text.size());
    for (const auto& s : bundle.text) sentences.push_back(grammar::words_of(s));
    return uncover(bundle.stego_audio, sentences, lex);
}

DistortionReport distortion_report(const wav::AudioClip& original, const wav::AudioClip& stego) {
    if (original.samples.size() != stego.samples.size())
        throw Error(ErrorKind::LengthMismatch, std::to_string(original.samples.size()) + " vs " +
                                                   std::to_string(stego.samples.size()) + " samples");
    DistortionReport r;
    double signal = 0.0;
    double noise = 0.0;
    double abs_sum = 0.0;
    for (std::size_t i = 0; i < original.samples.size(); ++i) {
        const std::uint16_t a = original.samples[i];
        const std::uint16_t b = stego.samples[i];
        const auto delta = static_cast<std::uint32_t>(std::abs(static_cast<int>(a) - static_cast<int>(b)));
        if (delta != 0) ++r.samples_changed;
        r.max_abs_delta = std::max(r.max_abs_delta, delta);
        abs_sum += delta;

        const double sa = static_cast<std::int16_t>(a);
        const double sb = static_cast<std::int16_t>(b);
        signal += sa * sa;
        noise += (sa - sb) * (sa - sb);
    }
    if (!original.samples.empty()) r.mean_abs_delta = abs_sum / static_cast<double>(original.samples.size());
    r.snr_db = noise == 0.0 ? std::numeric_limits<double>::infinity() : 10.0 * std::log10(signal / noise);
    return r;
}

namespace text {

std::string format(std::span<const grammar::Sentence> sentences) {
    std::size_t total = 0;
    for (const auto& s : sentences)
        for (const auto& t : s) total += t.word.size() + 1;
    std::string out;
    out.reserve(total);
    for (const auto& s : sentences) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i != 0) out += ' ';
            for (char c : s[i].word) out += (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
        }
        out += '\n';
    }
    return out;
}

std::vector<std::vector<std::string>> parse(std::string_view text) {
    std::vector<std::vector<std::string>> out;
    std::vector<std::string_view> words;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        split_words(text.substr(0, eol), words);
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
        if (!words.empty()) out.emplace_back(words.begin(), words.end());
    }
    return out;
}

} // namespace text

} // namespace duostego
