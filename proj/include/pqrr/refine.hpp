#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pqrr/adc_index.hpp"
#include "pqrr/product_quantizer.hpp"
#include "pqrr/types.hpp"

namespace pqrr {

/// Second-stage product quantizer over d-dimensional residual vectors
/// y - q_c(y), with mprime sub-quantizers of 8 bits each.
struct RefineQuantizer {
    ProductQuantizer pq;

    std::uint32_t mprime() const { return pq.m; }
};

/// n refinement codes of mprime bytes, id-aligned with the owning index.
struct RefineCodes {
    std::uint32_t m = 0;  // bytes per code
    std::vector<std::uint8_t> bytes;

    std::size_t n() const { return m == 0 ? 0 : bytes.size() / m; }
    const std::uint8_t* code(std::size_t i) const { return bytes.data() + i * m; }
};

/// The quantization error vector y - q_c(y) (encode then decode).
std::vector<float> residual(std::span<const float> y, const ProductQuantizer& pq_c);

/// Trains the refinement quantizer on the residual set of `training`
/// under the (final) first-stage quantizer. 8 bits per sub-quantizer.
RefineQuantizer refine_train(const ProductQuantizer& pq_c, const VectorSet& training,
                             std::uint32_t mprime, const TrainParams& params);

/// Encodes the residual of every indexed vector; code i is id-aligned.
RefineCodes refine_encode(const AdcIndex& index, const RefineQuantizer& rq,
                          const VectorSet& base);

/// Improved estimate of the original vector: first-stage decode plus the
/// decoded residual.
std::vector<float> reconstruct(const ProductQuantizer& pq_c, const RefineQuantizer& rq,
                               std::span<const std::uint8_t> code_c,
                               std::span<const std::uint8_t> code_r);

/// Re-ranks a first-stage shortlist by explicitly reconstructing each
/// candidate and recomputing its squared distance to the query. Returns the
/// k best under (dist, id); output ids are a subset of the shortlist ids.
SearchResult rerank(std::span<const float> x, const SearchResult& shortlist,
                    const AdcIndex& index, const RefineQuantizer& rq,
                    const RefineCodes& codes, std::size_t k);

}  // namespace pqrr
