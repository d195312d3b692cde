#pragma once
#include <optional>
#include <vector>

#include "dlim/matrix.hpp"

namespace dlim::fp {

// Dense mod-p matrix working set; rows feed the scalar/AVX2 kernels.
struct Mat {
    size_t rows = 0, cols = 0;
    uint32_t p = 2;
    std::vector<uint32_t> e;  // row-major

    uint32_t& at(size_t i, size_t j) { return e[i * cols + j]; }
    uint32_t at(size_t i, size_t j) const { return e[i * cols + j]; }
};

Mat from_matrix(const Matrix& a);
Matrix to_matrix(const Mat& a, Ring ring);

// In-place reduced row echelon form; returns pivot column list.
std::vector<size_t> rref(Mat& a);

size_t rank(const Matrix& a);
Matrix kernel(const Matrix& a);
std::optional<std::vector<Int>> solve(const Matrix& a, const std::vector<Int>& b);

}  // namespace dlim::fp
