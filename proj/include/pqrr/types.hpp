#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pqrr {

/// Dense row-major collection of n d-dimensional float vectors.
struct VectorSet {
    std::uint32_t d = 0;
    std::vector<float> data;

    VectorSet() = default;
    VectorSet(std::uint32_t dim, std::size_t count) : d(dim), data(std::size_t(dim) * count) {}

    std::size_t n() const { return d == 0 ? 0 : data.size() / d; }

    const float* row(std::size_t i) const { return data.data() + i * d; }
    float* row(std::size_t i) { return data.data() + i * d; }

    std::span<const float> vec(std::size_t i) const { return {row(i), d}; }

    // Throws if the layout is inconsistent or any value is non-finite.
    void validate() const {
        if (d == 0 && !data.empty())
            throw std::invalid_argument("VectorSet: d == 0 with non-empty data");
        if (d != 0 && data.size() % d != 0)
            throw std::invalid_argument("VectorSet: data length not a multiple of d");
        for (float v : data)
            if (!std::isfinite(v)) throw std::invalid_argument("VectorSet: non-finite value");
    }
};

/// One entry of a ranked search result: vector id plus squared-distance estimate.
struct Neighbor {
    std::uint32_t id = 0;
    float dist = 0.0f;
};

// Total order used everywhere results are ranked: ascending distance,
// ties broken by ascending id.
inline bool neighbor_less(const Neighbor& a, const Neighbor& b) {
    if (a.dist != b.dist) return a.dist < b.dist;
    return a.id < b.id;
}

/// Ranked list of (id, squared-distance) pairs, ascending under (dist, id).
struct SearchResult {
    std::vector<Neighbor> entries;

    std::size_t size() const { return entries.size(); }
    bool empty() const { return entries.empty(); }
    const Neighbor& operator[](std::size_t i) const { return entries[i]; }
};

}  // namespace pqrr
