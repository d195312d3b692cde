#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

#include "dlim/errors.hpp"
#include "dlim/ring.hpp"

namespace dlim {

using Int = boost::multiprecision::cpp_int;

// Dense exact matrix over Z or Z/p.  Arbitrary-precision entries throughout:
// Smith-form intermediates can blow up without bound, and a silent overflow
// here would corrupt every group computed downstream.
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, Ring ring = Ring::Z())
        : rows_(rows), cols_(cols), ring_(ring), e_(rows * cols) {}

    static Matrix identity(size_t n, Ring ring = Ring::Z()) {
        Matrix m(n, n, ring);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static Matrix zero(size_t rows, size_t cols, Ring ring = Ring::Z()) {
        return Matrix(rows, cols, ring);
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Ring ring() const { return ring_; }

    Int& at(size_t i, size_t j) {
        check(i, j);
        return e_[i * cols_ + j];
    }
    const Int& at(size_t i, size_t j) const {
        check(i, j);
        return e_[i * cols_ + j];
    }

    // Reduce all entries into [0, p) for field coefficients.
    void normalize() {
        if (!ring_.is_field()) return;
        Int p = ring_.p;
        for (auto& x : e_) {
            x %= p;
            if (x < 0) x += p;
        }
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    Matrix mul(const Matrix& b) const;
    Matrix sub(const Matrix& b) const;
    Matrix transpose() const;
    std::vector<Int> apply(const std::vector<Int>& v) const;  // this * v
    Matrix with_ring(Ring r) const;                           // reinterpret + reduce

    void swap_rows(size_t a, size_t b);
    void swap_cols(size_t a, size_t b);
    // row a += c * row b  (mod p if field)
    void add_row(size_t a, size_t b, const Int& c);
    void add_col(size_t a, size_t b, const Int& c);
    void scale_row(size_t a, const Int& c);
    void scale_col(size_t a, const Int& c);

    std::string str() const;

private:
    void check(size_t i, size_t j) const {
        if (i >= rows_ || j >= cols_)
            throw ValidationError("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") out of bounds for " + std::to_string(rows_) + "x" +
                                  std::to_string(cols_));
    }
    void reduce(Int& x) const {
        if (ring_.is_field()) {
            x %= ring_.p;
            if (x < 0) x += ring_.p;
        }
    }

    size_t rows_ = 0, cols_ = 0;
    Ring ring_ = Ring::Z();
    std::vector<Int> e_;
};

// A map of free modules target <- source is a (target_rank x source_rank)
// matrix acting on column vectors.
using ModuleMap = Matrix;

}  // namespace dlim
