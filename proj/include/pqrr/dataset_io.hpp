#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pqrr/types.hpp"

namespace pqrr {

/// Payload element of a vector file. Each record is a 4-byte little-endian
/// dimension header followed by d payload elements, repeated n times with
/// identical d (the fvecs / bvecs / ivecs layout).
enum class ElementKind : std::uint8_t {
    f32,  // IEEE-754 32-bit little-endian reals  (.fvecs)
    u8,   // raw unsigned bytes                   (.bvecs)
    i32,  // 32-bit little-endian signed integers (.ivecs)
};

std::size_t element_size(ElementKind kind);
ElementKind element_kind_from_name(const std::string& name);  // "fvecs" | "bvecs" | "ivecs"

struct ReadRange {
    std::size_t begin = 0;
    std::size_t end = SIZE_MAX;  // exclusive; clamped to the record count
};

/// Reads records [range.begin, range.end) into a VectorSet, widening byte
/// and integer payloads to float exactly. Every record's dimension header is
/// validated; a size or header inconsistency raises "corrupt file".
VectorSet read_vectors(const std::string& path, ElementKind kind, ReadRange range = {});

/// Inverse of read_vectors. Byte payloads are rounded to nearest; a value
/// outside [0, 255] is an error. Integer payloads must fit int32.
void write_vectors(const VectorSet& set, ElementKind kind, const std::string& path);

/// Streaming reader: iterates records in file order without loading the
/// whole file. One reader per thread; disjoint-range readers may run in
/// parallel on the same path.
class VectorFileReader {
  public:
    VectorFileReader(const std::string& path, ElementKind kind);
    ~VectorFileReader();
    VectorFileReader(VectorFileReader&&) noexcept;
    VectorFileReader& operator=(VectorFileReader&&) noexcept;

    std::uint32_t d() const { return d_; }
    std::size_t n() const { return n_; }

    /// Reads up to max_records records into out (resized); returns the count,
    /// 0 at end of file.
    std::size_t read_chunk(VectorSet& out, std::size_t max_records);

    void seek(std::size_t record);

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    std::uint32_t d_ = 0;
    std::size_t n_ = 0;
};

/// Per-query exact-neighbor lists: ids row-major (nq x k, each row ascending
/// by distance) plus optional squared distances.
struct GroundTruth {
    std::uint32_t k = 0;
    std::vector<std::int32_t> ids;
    std::vector<float> dists;  // empty when distances were not stored

    std::size_t nq() const { return k == 0 ? 0 : ids.size() / k; }
    std::int32_t nearest(std::size_t q) const { return ids[std::size_t(q) * k]; }
    const std::int32_t* row(std::size_t q) const { return ids.data() + std::size_t(q) * k; }
};

/// Ground truth persists as an integer-vector file of ids plus, optionally,
/// a real-vector file of squared distances (row per query).
void write_groundtruth(const GroundTruth& gt, const std::string& ids_path,
                       const std::string& dists_path = "");
GroundTruth read_groundtruth(const std::string& ids_path, const std::string& dists_path = "");

/// Seeded Gaussian-mixture sample: `clusters` component means, isotropic
/// within-component noise. Deterministic per seed and independent of thread
/// count (per-row counter-based streams).
VectorSet generate_synthetic(std::size_t n, std::uint32_t d, std::uint32_t clusters,
                             std::uint64_t seed);

}  // namespace pqrr
