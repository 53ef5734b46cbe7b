#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pqrr/product_quantizer.hpp"
#include "pqrr/types.hpp"

namespace pqrr {

/// Exhaustive-scan index: one m-byte code per database vector, id order.
/// Memory per indexed vector is exactly m bytes beyond the quantizer.
struct AdcIndex {
    ProductQuantizer pq;
    std::size_t n = 0;
    std::vector<std::uint8_t> codes;  // n * m contiguous

    const std::uint8_t* code(std::size_t i) const { return codes.data() + i * pq.m; }
};

/// Encodes the base set; ids are 0-based positions. Immutable afterwards.
AdcIndex adc_build(ProductQuantizer pq, const VectorSet& base);

/// First retrieval stage: builds one lookup table for the query and returns
/// the min(kprime, n) smallest distance estimates under (dist, id).
SearchResult adc_search(const AdcIndex& index, std::span<const float> x, std::size_t kprime);

/// Element-wise identical to adc_search; queries processed in order.
std::vector<SearchResult> adc_search_batch(const AdcIndex& index, const VectorSet& queries,
                                           std::size_t kprime);

}  // namespace pqrr
