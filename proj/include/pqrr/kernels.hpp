#pragma once

#include <cstddef>
#include <cstdint>

#include "pqrr/types.hpp"

namespace pqrr {

struct ProductQuantizer;
struct LookupTable;

namespace kernels {

/// Caps OpenMP worker parallelism. 0 restores the hardware default.
void set_threads(int t);
int max_threads();

/// Nearest-centroid assignment for n points against k centroids.
/// out_assign[i] gets the argmin index (ties to the lowest index),
/// out_dist[i] the squared distance. Parallel over points; results are
/// independent of thread count.
void assign_batch(const float* points, std::size_t n, std::uint32_t dim,
                  const float* centroids, std::uint32_t k,
                  std::uint32_t* out_assign, float* out_dist);

/// Product-quantizes n vectors into n*m code bytes. Parallel over vectors.
void encode_batch(const ProductQuantizer& pq, const float* data, std::size_t n,
                  std::uint8_t* out_codes);

/// Reconstructs n vectors from their codes. Parallel over vectors.
void decode_batch(const ProductQuantizer& pq, const std::uint8_t* codes, std::size_t n,
                  float* out_data);

/// Streaming scan of n codes against a per-query lookup table, keeping the
/// kprime smallest estimates under the (dist, id) order. Ids are 0-based scan
/// positions offset by id_base. The scan is partitioned across threads with
/// one bounded heap per partition; the merged result equals the serial scan
/// for every partitioning.
SearchResult scan_topk(const LookupTable& lut, const std::uint8_t* codes, std::size_t n,
                       std::size_t kprime, std::uint32_t id_base = 0);

}  // namespace kernels
}  // namespace pqrr
