#pragma once

#include <cstdint>
#include <vector>

#include "pqrr/types.hpp"

namespace pqrr {

/// A trained codebook: k centroids of dimensionality dim.
struct Codebook {
    std::uint32_t k = 0;
    std::uint32_t dim = 0;
    std::vector<float> centroids;  // k * dim, centroid-major
    double final_mse = 0.0;        // mean squared distance point -> assigned centroid

    const float* centroid(std::size_t i) const { return centroids.data() + i * dim; }
    float* centroid(std::size_t i) { return centroids.data() + i * dim; }
};

struct TrainParams {
    std::uint32_t iterations = 25;
    std::uint64_t seed = 0;
    std::uint32_t redo = 1;  // random restarts; best final MSE wins
    // When set, receives the per-iteration assignment objective (sum of
    // squared distances) of the winning restart.
    std::vector<double>* trace = nullptr;
};

// Lloyd's algorithm with seeded point-sampling init.
//
// Deterministic given (points, k, params.seed): the assignment step may run
// in parallel but is a pure per-point computation; objective and centroid
// updates are accumulated serially in id order, in double precision.
// Policies: argmin ties go to the lowest centroid index; an empty cluster is
// refilled by splitting the most populated cluster (seeded jitter on a copy
// of its centroid) unless the objective is exactly zero.
Codebook kmeans_train(const VectorSet& points, std::uint32_t k, const TrainParams& params);

}  // namespace pqrr
