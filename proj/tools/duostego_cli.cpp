// duostego: hide a payload in a 16-bit WAV file and describe the chosen
// sample locations as English sentences.
//
//   duostego cover    --carrier in.wav --payload secret.bin --out-wav out.wav --out-text out.txt [--seed N] [--lexicon L]
//   duostego uncover  --wav out.wav --text out.txt --out secret.bin [--lexicon L]
//   duostego capacity in.wav
//   duostego inspect  original.wav stego.wav

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "duostego/error.hpp"
#include "duostego/lexicon.hpp"
#include "duostego/pipeline.hpp"
#include "duostego/random.hpp"
#include "duostego/wav.hpp"

namespace {

enum ExitCode : int {
    kOk = 0,
    kIoError = 1,
    kUsage = 2,
    kCapacity = 3,
    kLexicon = 4,
    kParse = 5,
    kExtraction = 6,
};

int exit_code_for(duostego::ErrorKind kind) {
    using duostego::ErrorKind;
    switch (kind) {
    case ErrorKind::CapacityExceeded:
    case ErrorKind::Oversize:
    case ErrorKind::ZeroSamples:
        return kCapacity;
    case ErrorKind::ParseError:
    case ErrorKind::DuplicateWord:
    case ErrorKind::IncompleteCategory:
        return kLexicon;
    case ErrorKind::NotRiff:
    case ErrorKind::UnsupportedDepth:
    case ErrorKind::UnsupportedCodec:
    case ErrorKind::Truncated:
    case ErrorKind::Malformed:
        return kParse;
    default:
        return kExtraction;
    }
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const void* data, std::size_t size) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot create " + path);
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
    if (!out) throw std::runtime_error("write failed: " + path);
}

duostego::wav::AudioClip load_wav(const std::string& path) {
    const auto bytes = read_file(path);
    return duostego::wav::parse_wav(bytes);
}

duostego::lexicon::Lexicon load_lexicon(const std::string& path) {
    if (path.empty()) return duostego::lexicon::Lexicon::bundled();
    const auto bytes = read_file(path);
    return duostego::lexicon::Lexicon::load(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-intermediate audio steganography: 3-LSB WAV embedding with sentence-encoded locations"};
    app.require_subcommand(1);

    std::string lexicon_path;

    auto* cover_cmd = app.add_subcommand("cover", "Hide a payload; writes stego WAV and sentence text");
    std::string carrier_path, payload_path, out_wav_path, out_text_path;
    std::optional<std::uint64_t> seed;
    cover_cmd->add_option("--carrier", carrier_path, "Carrier 16-bit PCM WAV")->required()->check(CLI::ExistingFile);
    cover_cmd->add_option("--payload", payload_path, "File to hide")->required()->check(CLI::ExistingFile);
    cover_cmd->add_option("--out-wav", out_wav_path, "Stego WAV output")->required();
    cover_cmd->add_option("--out-text", out_text_path, "Sentence text output")->required();
    cover_cmd->add_option("--seed", seed, "Selection seed (default: random)");
    cover_cmd->add_option("--lexicon", lexicon_path, "Lexicon file (default: bundled)");

    auto* uncover_cmd = app.add_subcommand("uncover", "Recover a payload from stego WAV and sentence text");
    std::string stego_path, text_path, out_path;
    uncover_cmd->add_option("--wav", stego_path, "Stego WAV")->required()->check(CLI::ExistingFile);
    uncover_cmd->add_option("--text", text_path, "Sentence text")->required()->check(CLI::ExistingFile);
    uncover_cmd->add_option("--out", out_path, "Recovered payload output")->required();
    uncover_cmd->add_option("--lexicon", lexicon_path, "Lexicon file (default: bundled)");

    auto* capacity_cmd = app.add_subcommand("capacity", "Print the payload capacity of a carrier");
    std::string capacity_path;
    capacity_cmd->add_option("wav", capacity_path, "Carrier WAV")->required()->check(CLI::ExistingFile);

    auto* inspect_cmd = app.add_subcommand("inspect", "Compare a carrier with its stego version");
    std::string original_path, inspect_stego_path;
    inspect_cmd->add_option("original", original_path, "Original WAV")->required()->check(CLI::ExistingFile);
    inspect_cmd->add_option("stego", inspect_stego_path, "Stego WAV")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*cover_cmd) {
            const auto lex = load_lexicon(lexicon_path);
            const auto carrier = load_wav(carrier_path);
            const auto payload = read_file(payload_path);
            const std::uint64_t used_seed = seed.value_or(duostego::rng::entropy_seed());
            const auto bundle = duostego::cover(carrier, payload, lex, used_seed);
            const auto wav_bytes = duostego::wav::write_wav(bundle.stego_audio);
            const auto text = duostego::text::format(bundle.text);
            write_file(out_wav_path, wav_bytes.data(), wav_bytes.size());
            write_file(out_text_path, text.data(), text.size());
            std::cout << "hid " << payload.size() << " bytes in " << bundle.text.size() << " samples (seed "
                      << used_seed << ")\n";
        } else if (*uncover_cmd) {
            const auto lex = load_lexicon(lexicon_path);
            const auto stego = load_wav(stego_path);
            const auto raw = read_file(text_path);
            const auto payload =
                duostego::uncover(stego, std::string_view(reinterpret_cast<const char*>(raw.data()), raw.size()), lex);
            write_file(out_path, payload.data(), payload.size());
            std::cout << "recovered " << payload.size() << " bytes\n";
        } else if (*capacity_cmd) {
            const auto clip = load_wav(capacity_path);
            const auto n = duostego::wav::sample_count(clip);
            std::cout << "samples: " << n << '\n'
                      << "capacity_bytes: " << duostego::capacity_bytes(clip) << '\n'
                      << "payload_to_carrier_bits: 3/16 = " << 3.0 / 16.0 << '\n';
        } else if (*inspect_cmd) {
            const auto report = duostego::distortion_report(load_wav(original_path), load_wav(inspect_stego_path));
            std::cout << "samples_changed: " << report.samples_changed << '\n'
                      << "max_abs_delta: " << report.max_abs_delta << '\n'
                      << "mean_abs_delta: " << report.mean_abs_delta << '\n'
                      << "snr_db: " << report.snr_db << '\n';
        }
    } catch (const duostego::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoError;
    }
    return kOk;
}
