#pragma once

#include <cstddef>
#include <vector>

namespace stylegen {

// Row-major dense matrix. Plain storage only; the pipeline needs no
// decompositions.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}

    double& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    const double* row(std::size_t r) const { return a.data() + r * cols; }
    double* row(std::size_t r) { return a.data() + r * cols; }

    bool operator==(const Mat& other) const = default;
};

}  // namespace stylegen
