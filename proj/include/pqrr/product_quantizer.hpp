#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pqrr/kmeans.hpp"
#include "pqrr/types.hpp"

namespace pqrr {

/// Product quantizer: m independent sub-codebooks of ks centroids each.
/// Encodes a d-vector as m byte indices (ks <= 256); the implicit codebook
/// of ks^m reproduction values is never enumerated.
struct ProductQuantizer {
    std::uint32_t d = 0;
    std::uint32_t m = 0;
    std::uint32_t ks = 0;
    std::vector<Codebook> books;  // m books, each k = ks, dim = d/m

    std::uint32_t dsub() const { return m == 0 ? 0 : d / m; }
    std::size_t code_size() const { return m; }
    std::uint32_t bits_per_sub() const;
};

/// Per-query table of squared distances: entry (j, i) is the distance from
/// query subvector j to centroid i of sub-codebook j.
struct LookupTable {
    std::uint32_t m = 0;
    std::uint32_t ks = 0;
    std::vector<float> values;  // m * ks, subquantizer-major

    float at(std::uint32_t j, std::uint32_t i) const { return values[std::size_t(j) * ks + i]; }
    const float* row(std::uint32_t j) const { return values.data() + std::size_t(j) * ks; }
};

// Trains the m sub-codebooks independently on subvector slices. Sub-book j
// uses seed params.seed + j so books stay decoupled but reproducible.
ProductQuantizer pq_train(const VectorSet& training, std::uint32_t m, std::uint32_t ks,
                          const TrainParams& params);

void pq_encode_into(const ProductQuantizer& pq, const float* y, std::uint8_t* code);
std::vector<std::uint8_t> pq_encode(const ProductQuantizer& pq, std::span<const float> y);

void pq_decode_into(const ProductQuantizer& pq, const std::uint8_t* code, float* out);
std::vector<float> pq_decode(const ProductQuantizer& pq, std::span<const std::uint8_t> code);

/// Builds the per-query lookup table; touches each centroid exactly once.
LookupTable build_lut(const ProductQuantizer& pq, std::span<const float> x);

/// Estimated squared distance: the sum of the code's table entries,
/// accumulated in ascending subquantizer order.
inline float adc_distance(const LookupTable& lut, const std::uint8_t* code) {
    float acc = 0.0f;
    for (std::uint32_t j = 0; j < lut.m; ++j) acc += lut.values[std::size_t(j) * lut.ks + code[j]];
    return acc;
}

float adc_distance(const LookupTable& lut, std::span<const std::uint8_t> code);

}  // namespace pqrr
