#include "pqrr/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "pqrr/distance.hpp"
#include "pqrr/product_quantizer.hpp"
#include "pqrr/topk.hpp"

namespace pqrr::kernels {

void set_threads(int t) {
    omp_set_num_threads(t <= 0 ? omp_get_num_procs() : t);
}

int max_threads() { return omp_get_max_threads(); }

void assign_batch(const float* points, std::size_t n, std::uint32_t dim,
                  const float* centroids, std::uint32_t k,
                  std::uint32_t* out_assign, float* out_dist) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < std::int64_t(n); ++i) {
        const float* p = points + std::size_t(i) * dim;
        std::uint32_t best = 0;
        float best_dist = l2_sq(p, centroids, dim);
        for (std::uint32_t c = 1; c < k; ++c) {
            float dist = l2_sq(p, centroids + std::size_t(c) * dim, dim);
            if (dist < best_dist) {
                best_dist = dist;
                best = c;
            }
        }
        out_assign[i] = best;
        out_dist[i] = best_dist;
    }
}

void encode_batch(const ProductQuantizer& pq, const float* data, std::size_t n,
                  std::uint8_t* out_codes) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < std::int64_t(n); ++i)
        pq_encode_into(pq, data + std::size_t(i) * pq.d, out_codes + std::size_t(i) * pq.m);
}

void decode_batch(const ProductQuantizer& pq, const std::uint8_t* codes, std::size_t n,
                  float* out_data) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < std::int64_t(n); ++i)
        pq_decode_into(pq, codes + std::size_t(i) * pq.m, out_data + std::size_t(i) * pq.d);
}

SearchResult scan_topk(const LookupTable& lut, const std::uint8_t* codes, std::size_t n,
                       std::size_t kprime, std::uint32_t id_base) {
    if (kprime == 0 || n == 0) return {};

    const std::uint32_t m = lut.m;

    // Small scans, or scans issued from inside an already-parallel region
    // (e.g. a batched query loop), stay on one thread.
    if (n < 8192 || omp_in_parallel() || omp_get_max_threads() == 1) {
        TopK heap(kprime);
        for (std::size_t i = 0; i < n; ++i)
            heap.push(id_base + std::uint32_t(i), adc_distance(lut, codes + i * m));
        return heap.take_sorted();
    }

    // Partitioned scan: one bounded heap per chunk. Each chunk's heap holds
    // its local top-kprime, so the merged cut equals the serial result for
    // any partitioning; thread count never changes the answer.
    std::vector<std::vector<Neighbor>> parts;
#pragma omp parallel
    {
#pragma omp single
        parts.resize(omp_get_num_threads());
        const int t = omp_get_thread_num();
        const int nt = omp_get_num_threads();
        const std::size_t chunk = (n + nt - 1) / nt;
        const std::size_t lo = std::min(n, chunk * std::size_t(t));
        const std::size_t hi = std::min(n, lo + chunk);
        TopK heap(kprime);
        for (std::size_t i = lo; i < hi; ++i)
            heap.push(id_base + std::uint32_t(i), adc_distance(lut, codes + i * m));
        parts[t] = heap.take_sorted().entries;
    }

    std::vector<Neighbor> all;
    for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    std::sort(all.begin(), all.end(), neighbor_less);
    if (all.size() > kprime) all.resize(kprime);
    SearchResult r;
    r.entries = std::move(all);
    return r;
}

}  // namespace pqrr::kernels
