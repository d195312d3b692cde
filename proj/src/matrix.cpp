#include "dlim/matrix.hpp"

#include <sstream>

namespace dlim {

Matrix Matrix::mul(const Matrix& b) const {
    require(cols_ == b.rows_, "matrix product dimension mismatch: " + std::to_string(cols_) +
                                  " vs " + std::to_string(b.rows_));
    Matrix r(rows_, b.cols_, ring_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Int& a = e_[i * cols_ + k];
            if (a == 0) continue;
            for (size_t j = 0; j < b.cols_; ++j) {
                if (b.e_[k * b.cols_ + j] == 0) continue;
                r.e_[i * r.cols_ + j] += a * b.e_[k * b.cols_ + j];
            }
        }
    r.normalize();
    return r;
}

Matrix Matrix::sub(const Matrix& b) const {
    require(rows_ == b.rows_ && cols_ == b.cols_, "matrix difference dimension mismatch");
    Matrix r(rows_, cols_, ring_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - b.e_[i];
    r.normalize();
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_, ring_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<Int> Matrix::apply(const std::vector<Int>& v) const {
    require(v.size() == cols_, "matrix-vector dimension mismatch");
    std::vector<Int> r(rows_);
    for (size_t i = 0; i < rows_; ++i) {
        Int acc = 0;
        for (size_t j = 0; j < cols_; ++j) acc += e_[i * cols_ + j] * v[j];
        reduce(acc);
        r[i] = acc;
    }
    return r;
}

Matrix Matrix::with_ring(Ring r) const {
    Matrix m = *this;
    m.ring_ = r;
    m.normalize();
    return m;
}

void Matrix::swap_rows(size_t a, size_t b) {
    if (a == b) return;
    for (size_t j = 0; j < cols_; ++j) std::swap(e_[a * cols_ + j], e_[b * cols_ + j]);
}

void Matrix::swap_cols(size_t a, size_t b) {
    if (a == b) return;
    for (size_t i = 0; i < rows_; ++i) std::swap(e_[i * cols_ + a], e_[i * cols_ + b]);
}

void Matrix::add_row(size_t a, size_t b, const Int& c) {
    for (size_t j = 0; j < cols_; ++j) {
        e_[a * cols_ + j] += c * e_[b * cols_ + j];
        reduce(e_[a * cols_ + j]);
    }
}

void Matrix::add_col(size_t a, size_t b, const Int& c) {
    for (size_t i = 0; i < rows_; ++i) {
        e_[i * cols_ + a] += c * e_[i * cols_ + b];
        reduce(e_[i * cols_ + a]);
    }
}

void Matrix::scale_row(size_t a, const Int& c) {
    for (size_t j = 0; j < cols_; ++j) {
        e_[a * cols_ + j] *= c;
        reduce(e_[a * cols_ + j]);
    }
}

void Matrix::scale_col(size_t a, const Int& c) {
    for (size_t i = 0; i < rows_; ++i) {
        e_[i * cols_ + a] *= c;
        reduce(e_[i * cols_ + a]);
    }
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

}  // namespace dlim
