#include "duostego/sample_grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>

#include "duostego/error.hpp"
#include "duostego/random.hpp"

namespace duostego::grid {
namespace {

std::uint64_t ceil_sqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r >= n) --r;
    while (r * r < n) ++r;
    return r;
}

unsigned decimal_digits(std::uint64_t v) {
    unsigned d = 1;
    while (v >= 10) {
        v /= 10;
        ++d;
    }
    return d;
}

} // namespace

GridGeometry geometry(std::uint64_t n) {
    if (n == 0) throw Error(ErrorKind::ZeroSamples, "carrier has no samples");
    GridGeometry g;
    g.total_samples = n;
    g.width = ceil_sqrt(n);
    g.height = (n + g.width - 1) / g.width;
    g.digit_width = decimal_digits(std::max(g.width - 1, g.height - 1));
    return g;
}

Coordinate index_to_coord(const GridGeometry& g, std::uint64_t i) {
    if (i >= g.total_samples)
        throw Error(ErrorKind::OutOfRange, "sample index " + std::to_string(i) + " >= " + std::to_string(g.total_samples));
    return {i / g.width, i % g.width};
}

std::uint64_t coord_to_index(const GridGeometry& g, Coordinate c) {
    if (c.x >= g.height || c.y >= g.width || c.x * g.width + c.y >= g.total_samples)
        throw Error(ErrorKind::OutOfRange,
                    "coordinate (" + std::to_string(c.x) + ", " + std::to_string(c.y) + ") is off the grid");
    return c.x * g.width + c.y;
}

std::vector<std::uint64_t> select_samples(std::uint64_t n, std::uint64_t m, std::uint64_t seed) {
    if (m > n)
        throw Error(ErrorKind::CapacityExceeded,
                    std::to_string(m) + " slots requested from " + std::to_string(n) + " samples");
    rng::Engine engine(seed);
    std::vector<std::uint64_t> out;
    out.reserve(m);

    // Dense and sparse paths run the same shuffle; the sparse one only
    // records slots that have been swapped.
    if (m * 8 >= n) {
        std::vector<std::uint64_t> slots(n);
        std::iota(slots.begin(), slots.end(), std::uint64_t{0});
        for (std::uint64_t i = 0; i < m; ++i) {
            const std::uint64_t j = i + rng::uniform_below(engine, n - i);
            std::swap(slots[i], slots[j]);
            out.push_back(slots[i]);
        }
    } else {
        std::unordered_map<std::uint64_t, std::uint64_t> moved;
        moved.reserve(2 * m);
        auto at = [&moved](std::uint64_t k) {
            auto it = moved.find(k);
            return it == moved.end() ? k : it->second;
        };
        for (std::uint64_t i = 0; i < m; ++i) {
            const std::uint64_t j = i + rng::uniform_below(engine, n - i);
            const std::uint64_t vi = at(i);
            const std::uint64_t vj = at(j);
            moved[j] = vi;
            out.push_back(vj);
        }
    }
    return out;
}

} // namespace duostego::grid
