#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pqrr/dataset_io.hpp"
#include "pqrr/types.hpp"

namespace pqrr {

/// True k nearest neighbors by squared Euclidean distance, accumulated in
/// double precision, (dist, id) tie order. k > n returns n entries.
SearchResult exact_search(const VectorSet& base, std::span<const float> x, std::size_t k);

/// Batched exact search over all queries (parallel over queries).
GroundTruth compute_groundtruth(const VectorSet& base, const VectorSet& queries,
                                std::uint32_t k);

/// Fraction of queries whose true nearest neighbor appears within the first
/// min(r, |result|) returned entries.
double recall_at_r(const std::vector<SearchResult>& results, const GroundTruth& gt,
                   std::size_t r);

/// recall@r sampled at ascending ranks.
struct RecallCurve {
    std::vector<std::size_t> ranks;
    std::vector<double> recalls;
};

RecallCurve recall_curve(const std::vector<SearchResult>& results, const GroundTruth& gt,
                         std::span<const std::size_t> ranks);

/// One benchmark row: method label, parameters, recall@{1,10,100}, mean
/// query time and memory accounting.
struct BenchRow {
    std::string method;  // ADC | ADC+R | IVFADC | IVFADC+R
    std::uint32_t m = 0;
    std::uint32_t mprime = 0;  // 0 when no refinement
    std::uint32_t c = 0;       // 0 for exhaustive methods
    std::uint32_t v = 0;
    std::size_t k = 0;
    std::size_t kprime = 0;
    std::size_t queries = 0;
    double recall1 = 0.0;
    double recall10 = 0.0;
    double recall100 = 0.0;
    double time_per_query = 0.0;  // seconds, single-thread wall clock
    double bytes_per_vector = 0.0;
};

/// Experiment driver configuration. Index files are listed explicitly; each
/// yields a row for its first-stage method and, when refinement codes are
/// present, a second row for the re-ranked variant.
struct ExperimentConfig {
    std::string queries_path;   // fvecs
    std::string gt_ids_path;    // ivecs
    std::vector<std::string> index_paths;
    std::size_t k = 100;
    std::size_t kprime = 0;  // 0 -> 2k
    std::uint32_t v = 8;
    std::size_t query_count = 1000;  // measurements averaged over this many
    bool timings = true;             // false zeroes the time column
};

/// Runs every method in the config against the shared queries and ground
/// truth. Missing input files raise an error listing what must be built.
std::vector<BenchRow> run_experiment(const ExperimentConfig& config);

std::string report_tsv(const std::vector<BenchRow>& rows);
std::string report_table(const std::vector<BenchRow>& rows);

}  // namespace pqrr
