#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <sys/wait.h>

#include "oracles/reference_wav_writer.hpp"

namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("duostego_cli_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

int run(const std::string& args) {
    const std::string cmd = std::string(DUOSTEGO_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string run_capture(const std::string& args, const fs::path& out) {
    const std::string cmd = std::string(DUOSTEGO_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
    [[maybe_unused]] const int status = std::system(cmd.c_str());
    std::ifstream in(out);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes(const fs::path& p, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(p, std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

std::vector<std::uint8_t> read_bytes(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::uint8_t> random_wav(std::size_t samples, std::uint16_t channels) {
    std::mt19937 gen(1234);
    std::vector<std::int32_t> values(samples);
    for (auto& v : values) v = static_cast<std::int32_t>(gen() % 65536) - 32768;
    oracle::WavSpec spec;
    spec.channels = channels;
    spec.sample_rate = 44100;
    spec.data = oracle::pcm16(values);
    spec.after_data.push_back({"LIST", {'I', 'N', 'F', 'O', 'x'}});
    return oracle::write(spec);
}

} // namespace

TEST_CASE("cli cover / uncover / capacity / inspect") {
    TempDir dir;
    const auto carrier = dir.path / "carrier.wav";
    const auto secret = dir.path / "secret.bin";
    const auto stego = dir.path / "stego.wav";
    const auto text = dir.path / "cover.txt";
    const auto recovered = dir.path / "recovered.bin";
    write_bytes(carrier, random_wav(20000, 2));
    const std::vector<std::uint8_t> payload{'k', 'i', 'l', 'l', ' ', 'j', 'o', 'e', 0, 255};
    write_bytes(secret, payload);

    REQUIRE(run("cover --carrier " + carrier.string() + " --payload " + secret.string() + " --out-wav " +
                stego.string() + " --out-text " + text.string() + " --seed 5") == 0);
    REQUIRE(run("uncover --wav " + stego.string() + " --text " + text.string() + " --out " + recovered.string()) == 0);
    CHECK(read_bytes(recovered) == payload);
    // (80 + 32) / 3 rounded up
    std::ifstream lines(text);
    CHECK(std::count(std::istreambuf_iterator<char>(lines), std::istreambuf_iterator<char>(), '\n') == 38);

    const auto cap = run_capture("capacity " + carrier.string(), dir.path / "cap.txt");
    CHECK(cap.find("capacity_bytes: 7496") != std::string::npos);
    CHECK(cap.find("0.1875") != std::string::npos);

    const auto inspect = run_capture("inspect " + carrier.string() + " " + stego.string(), dir.path / "inspect.txt");
    CHECK(inspect.find("max_abs_delta: ") != std::string::npos);

    SUBCASE("capacity error exit code") {
        std::vector<std::uint8_t> big(7497, 1);
        write_bytes(secret, big);
        CHECK(run("cover --carrier " + carrier.string() + " --payload " + secret.string() + " --out-wav " +
                  stego.string() + " --out-text " + text.string()) == 3);
    }
    SUBCASE("lexicon error exit code") {
        const auto lex = dir.path / "bad.lex";
        std::ofstream(lex) << "0|verb|walk\n9|verb|walk\n";
        CHECK(run("uncover --wav " + stego.string() + " --text " + text.string() + " --out " + recovered.string() +
                  " --lexicon " + lex.string()) == 4);
    }
    SUBCASE("parse error exit code") {
        auto bytes = read_bytes(carrier);
        bytes[34] = 8; // bits per sample
        write_bytes(dir.path / "eight.wav", bytes);
        CHECK(run("capacity " + (dir.path / "eight.wav").string()) == 5);
    }
    SUBCASE("extraction error exit code") {
        std::ofstream(text) << "zzzz zzzz zzzz zzzz zzzz zzzz\n";
        CHECK(run("uncover --wav " + stego.string() + " --text " + text.string() + " --out " + recovered.string()) == 6);
    }
    SUBCASE("usage error exit code") { CHECK(run("cover --carrier") == 2); }
}
