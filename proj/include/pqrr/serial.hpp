#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pqrr/product_quantizer.hpp"
#include "pqrr/types.hpp"

namespace pqrr::serial {

// Single-threaded reference implementations of the hot kernels. These are
// deliberately plain loops, written independently of the OpenMP paths in
// pqrr::kernels, and are kept in the library so tests can check the parallel
// kernels against them and the kernel benchmark can compare throughput.
// They follow the same arithmetic conventions (see distance.hpp), so
// agreement is bit-exact, not approximate.

void assign_batch(const float* points, std::size_t n, std::uint32_t dim,
                  const float* centroids, std::uint32_t k,
                  std::uint32_t* out_assign, float* out_dist);

void encode_batch(const ProductQuantizer& pq, const float* data, std::size_t n,
                  std::uint8_t* out_codes);

void decode_batch(const ProductQuantizer& pq, const std::uint8_t* codes, std::size_t n,
                  float* out_data);

/// All n distance estimates for one query, in id order.
std::vector<float> scan_distances(const LookupTable& lut, const std::uint8_t* codes,
                                  std::size_t n);

/// Top-k by fully sorting the id-indexed distance array under (dist, id).
SearchResult topk_by_sort(const std::vector<float>& dists, std::size_t k);

/// Exact k-nearest-neighbor search by full sort of double-precision
/// squared distances.
SearchResult exact_search(const VectorSet& base, std::span<const float> x, std::size_t k);

}  // namespace pqrr::serial
