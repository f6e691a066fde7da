#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "duostego/error.hpp"
#include "duostego/sample_grid.hpp"

using duostego::Error;
using duostego::ErrorKind;
using namespace duostego::grid;

TEST_CASE("geometry") {
    CHECK(geometry(1) == GridGeometry{1, 1, 1, 1});
    CHECK(geometry(1000) == GridGeometry{1000, 32, 32, 2});
    CHECK(geometry(1000000) == GridGeometry{1000000, 1000, 1000, 3});
    CHECK(geometry(2) == GridGeometry{2, 2, 1, 1});
    CHECK(geometry(101) == GridGeometry{101, 11, 10, 2});
    CHECK_THROWS_AS(geometry(0), Error);
}

TEST_CASE("property: geometry invariants") {
    std::mt19937_64 gen(5);
    for (int round = 0; round < 2000; ++round) {
        const std::uint64_t n = 1 + gen() % (round < 1000 ? 5000 : 50000000);
        const auto g = geometry(n);
        CHECK(g.width * g.width >= n);
        CHECK((g.width - 1) * (g.width - 1) < n);
        CHECK(g.width * g.height >= n);
        CHECK(g.width * (g.height - 1) < n);
        CHECK(std::to_string(std::max(g.width - 1, g.height - 1)).size() == g.digit_width);
    }
}

TEST_CASE("index and coordinate conversions") {
    const auto g = geometry(1000);
    CHECK(index_to_coord(g, 0) == Coordinate{0, 0});
    CHECK(index_to_coord(g, 65) == Coordinate{2, 1});
    CHECK(coord_to_index(g, {2, 1}) == 65);
    CHECK_THROWS_AS(index_to_coord(g, 1000), Error);
    CHECK_THROWS_AS(coord_to_index(g, {0, 32}), Error);
    CHECK_THROWS_AS(coord_to_index(g, {32, 0}), Error);
    // last row is partial: 1000 = 31 * 32 + 8
    CHECK(coord_to_index(g, {31, 7}) == 999);
    CHECK_THROWS_AS(coord_to_index(g, {31, 8}), Error);

    for (std::uint64_t i = 0; i < 1000; ++i) CHECK(coord_to_index(g, index_to_coord(g, i)) == i);
}

TEST_CASE("select_samples") {
    CHECK(select_samples(10, 0, 1).empty());

    auto all = select_samples(50, 50, 3);
    std::sort(all.begin(), all.end());
    for (std::uint64_t i = 0; i < 50; ++i) CHECK(all[i] == i);

    CHECK(select_samples(100, 10, 42) == select_samples(100, 10, 42));
    CHECK(select_samples(100, 10, 42) != select_samples(100, 10, 43));

    try {
        select_samples(5, 6, 0);
        FAIL("expected CapacityExceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CapacityExceeded);
    }
}

TEST_CASE("property: selection is distinct, in range, and path-independent") {
    std::mt19937_64 gen(11);
    for (int round = 0; round < 300; ++round) {
        const std::uint64_t n = 1 + gen() % 5000;
        const std::uint64_t m = gen() % (n + 1);
        const auto picks = select_samples(n, m, gen());
        CHECK(picks.size() == m);
        CHECK(std::set<std::uint64_t>(picks.begin(), picks.end()).size() == m);
        for (auto p : picks) CHECK(p < n);
    }
    // A request just under and just over the dense threshold must agree on
    // their common prefix, since both run the same shuffle.
    const auto sparse = select_samples(8000, 999, 77);
    const auto dense = select_samples(8000, 1000, 77);
    CHECK(std::equal(sparse.begin(), sparse.end(), dense.begin()));
}

TEST_CASE("embed and extract") {
    CHECK(embed_chunk(0b0010111100111111, 0b110) == 0b0010111100111110);
    CHECK(embed_chunk(0x0000, 0) == 0x0000);
    CHECK(extract_chunk(0b0000000000000111) == 7);
    CHECK(extract_chunk(0b0010111100111110) == 0b110);

    for (std::uint32_t s = 0; s <= 0xFFFF; s += 37) {
        const auto sample = static_cast<std::uint16_t>(s);
        for (std::uint8_t a = 0; a < 8; ++a) {
            const auto once = embed_chunk(sample, a);
            CHECK((once >> 3) == (sample >> 3));
            CHECK(extract_chunk(once) == a);
            CHECK(std::abs(int(once) - int(sample)) <= 7);
            for (std::uint8_t b = 0; b < 8; ++b) CHECK(embed_chunk(once, b) == embed_chunk(sample, b));
        }
    }
}
