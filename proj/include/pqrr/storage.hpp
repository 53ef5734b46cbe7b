#pragma once

#include <optional>
#include <string>

#include "pqrr/adc_index.hpp"
#include "pqrr/ivf_index.hpp"
#include "pqrr/kmeans.hpp"
#include "pqrr/product_quantizer.hpp"
#include "pqrr/refine.hpp"

namespace pqrr {

// Binary container, magic "PQRR" + one version byte, little-endian
// throughout. Loaders are typed (the caller knows what artifact a path
// holds); every load validates exact payload sizes and rejects truncated or
// oversized files as corrupt.
//
//   quantizer file:  magic, version, d/m/ks (u32), centroids (f32,
//                    subquantizer-major, centroid-major, component-minor)
//   adc index file:  quantizer block, n (u64), n*m code bytes,
//                    optional [refine quantizer block, m' (u32), n*m' bytes]
//   ivf index file:  residual quantizer block, c (u32), coarse centroids
//                    (c*d f32), per-list lengths (u64), per-list (id u32,
//                    m code bytes) entries, optional refine block as above
//
// A plain codebook (the coarse quantizer) round-trips through the quantizer
// layout with m = 1.

inline constexpr char kMagic[4] = {'P', 'Q', 'R', 'R'};
inline constexpr std::uint8_t kFormatVersion = 1;

void save_quantizer(const ProductQuantizer& pq, const std::string& path);
ProductQuantizer load_quantizer(const std::string& path);

void save_codebook(const Codebook& book, const std::string& path);
Codebook load_codebook(const std::string& path);

void save_adc_index(const AdcIndex& index, const RefineQuantizer* rq,
                    const RefineCodes* codes, const std::string& path);

struct LoadedAdcIndex {
    AdcIndex index;
    std::optional<RefineQuantizer> refine_quantizer;
    std::optional<RefineCodes> refine_codes;
};
LoadedAdcIndex load_adc_index(const std::string& path);

void save_ivf_index(const IvfIndex& index, const RefineQuantizer* rq,
                    const RefineCodes* codes, const std::string& path);

struct LoadedIvfIndex {
    IvfIndex index;
    std::optional<RefineQuantizer> refine_quantizer;
    std::optional<RefineCodes> refine_codes;
};
LoadedIvfIndex load_ivf_index(const std::string& path);

enum class IndexKind { adc, ivf };

/// Structural sniff for tools that accept either index kind: validates the
/// section sizes of both layouts against the file size and returns the one
/// that fits exactly. Throws "corrupt file" when neither does.
IndexKind probe_index_kind(const std::string& path);

}  // namespace pqrr
