#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "pqrr/kmeans.hpp"
#include "pqrr/product_quantizer.hpp"
#include "pqrr/refine.hpp"
#include "pqrr/types.hpp"

namespace pqrr {

/// One inverted list: parallel arrays of vector ids and their m-byte codes,
/// id-ascending within the list.
struct IvfList {
    std::vector<std::uint32_t> ids;
    std::vector<std::uint8_t> codes;

    std::size_t size() const { return ids.size(); }
};

/// Non-exhaustive variant: a coarse quantizer partitions the base into c
/// inverted lists; codes quantize the residual about the assigned coarse
/// centroid. Every id lives in exactly one list.
struct IvfIndex {
    Codebook coarse;
    ProductQuantizer pq;  // trained on coarse residuals
    std::vector<IvfList> lists;
    std::size_t n = 0;

    // id -> (list, position) lookup, rebuilt on load; not serialized.
    std::vector<std::uint32_t> list_of_id;
    std::vector<std::uint32_t> pos_of_id;

    std::uint32_t c() const { return coarse.k; }
    const std::uint8_t* code_of_id(std::uint32_t id) const {
        return lists[list_of_id[id]].codes.data() + std::size_t(pos_of_id[id]) * pq.m;
    }
};

struct IvfSearchParams {
    std::uint32_t v = 8;       // probed lists, 1 <= v <= c
    std::size_t kprime = 100;  // shortlist size
};

/// Trains the coarse codebook on raw vectors and the product quantizer on
/// the residuals about the assigned coarse centroid.
std::pair<Codebook, ProductQuantizer> ivf_train(const VectorSet& training, std::uint32_t c,
                                                std::uint32_t m, std::uint32_t ks,
                                                const TrainParams& params);

/// Appends every base vector to the list of its nearest coarse centroid,
/// coding the residual. Within-list order is id-ascending.
IvfIndex ivf_build(Codebook coarse, ProductQuantizer pq, const VectorSet& base);

/// Probes the v lists whose centroids are nearest to the query; per list the
/// estimates come from a lookup table built on the residual query.
SearchResult ivf_search(const IvfIndex& index, std::span<const float> x,
                        const IvfSearchParams& params);

std::vector<SearchResult> ivf_search_batch(const IvfIndex& index, const VectorSet& queries,
                                           const IvfSearchParams& params);

/// Refinement for IVFADC: residuals are taken against the full first-stage
/// reconstruction (coarse centroid + code decode).
RefineQuantizer ivf_refine_train(const Codebook& coarse, const ProductQuantizer& pq,
                                 const VectorSet& training, std::uint32_t mprime,
                                 const TrainParams& params);

RefineCodes ivf_refine_encode(const IvfIndex& index, const RefineQuantizer& rq,
                              const VectorSet& base);

/// Three-term estimate: coarse centroid + code decode + refinement decode.
std::vector<float> ivf_reconstruct(const IvfIndex& index, const RefineQuantizer& rq,
                                   std::uint32_t id, const RefineCodes& codes);

SearchResult ivf_rerank(std::span<const float> x, const SearchResult& shortlist,
                        const IvfIndex& index, const RefineQuantizer& rq,
                        const RefineCodes& codes, std::size_t k);

}  // namespace pqrr
