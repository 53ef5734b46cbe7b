#pragma once

#include <cstddef>

namespace pqrr {

// Squared L2 distance kernels. Both kernels accumulate into four
// independent partial sums over component blocks [4t, 4t+1, 4t+2, 4t+3],
// remainder components appended to sums 0..2, and reduce as
// (s0 + s1) + (s2 + s3). This exact order is part of the library's
// arithmetic contract: the project is compiled without -ffast-math, so
// every translation unit that spells out the same order (including the
// serial reference and the test oracles) produces bit-identical values.

/// Squared L2 distance, float accumulation. Used by all estimator paths.
inline float l2_sq(const float* a, const float* b, std::size_t d) {
    float s0 = 0.0f, s1 = 0.0f, s2 = 0.0f, s3 = 0.0f;
    std::size_t j = 0;
    for (; j + 4 <= d; j += 4) {
        float t0 = a[j] - b[j];
        float t1 = a[j + 1] - b[j + 1];
        float t2 = a[j + 2] - b[j + 2];
        float t3 = a[j + 3] - b[j + 3];
        s0 += t0 * t0;
        s1 += t1 * t1;
        s2 += t2 * t2;
        s3 += t3 * t3;
    }
    if (j < d) { float t = a[j] - b[j]; s0 += t * t; ++j; }
    if (j < d) { float t = a[j] - b[j]; s1 += t * t; ++j; }
    if (j < d) { float t = a[j] - b[j]; s2 += t * t; ++j; }
    return (s0 + s1) + (s2 + s3);
}

/// Squared L2 distance, double accumulation. Used by the exact-search oracle.
inline double l2_sq_d(const float* a, const float* b, std::size_t d) {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    std::size_t j = 0;
    for (; j + 4 <= d; j += 4) {
        double t0 = double(a[j]) - double(b[j]);
        double t1 = double(a[j + 1]) - double(b[j + 1]);
        double t2 = double(a[j + 2]) - double(b[j + 2]);
        double t3 = double(a[j + 3]) - double(b[j + 3]);
        s0 += t0 * t0;
        s1 += t1 * t1;
        s2 += t2 * t2;
        s3 += t3 * t3;
    }
    if (j < d) { double t = double(a[j]) - double(b[j]); s0 += t * t; ++j; }
    if (j < d) { double t = double(a[j]) - double(b[j]); s1 += t * t; ++j; }
    if (j < d) { double t = double(a[j]) - double(b[j]); s2 += t * t; ++j; }
    return (s0 + s1) + (s2 + s3);
}

}  // namespace pqrr
