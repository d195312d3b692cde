#include "dlim/fpmat.hpp"

#include "dlim/fp_kernels.hpp"

namespace dlim::fp {

Mat from_matrix(const Matrix& a) {
    require(a.ring().is_field(), "field elimination needs Z/p coefficients");
    Mat m;
    m.rows = a.rows();
    m.cols = a.cols();
    m.p = a.ring().p;
    m.e.resize(m.rows * m.cols);
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) {
            Int x = a.at(i, j) % m.p;
            if (x < 0) x += m.p;
            m.e[i * m.cols + j] = x.convert_to<uint32_t>();
        }
    return m;
}

Matrix to_matrix(const Mat& a, Ring ring) {
    Matrix m(a.rows, a.cols, ring);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t j = 0; j < a.cols; ++j) m.at(i, j) = a.at(i, j);
    return m;
}

std::vector<size_t> rref(Mat& a) {
    auto axpy = fpk::axpy();
    auto scale = fpk::scale();
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t col = 0; col < a.cols && r < a.rows; ++col) {
        size_t piv = r;
        while (piv < a.rows && a.at(piv, col) == 0) ++piv;
        if (piv == a.rows) continue;
        if (piv != r)
            for (size_t j = 0; j < a.cols; ++j) std::swap(a.at(r, j), a.at(piv, j));
        uint32_t inv = fpk::inv_mod(a.at(r, col), a.p);
        if (inv != 1) scale(&a.e[r * a.cols], a.cols, inv, a.p);
        for (size_t i = 0; i < a.rows; ++i) {
            if (i == r || a.at(i, col) == 0) continue;
            uint32_t c = a.p - a.at(i, col);
            axpy(&a.e[i * a.cols], &a.e[r * a.cols], a.cols, c, a.p);
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

size_t rank(const Matrix& a) {
    Mat m = from_matrix(a);
    return rref(m).size();
}

Matrix kernel(const Matrix& a) {
    Mat m = from_matrix(a);
    auto pivots = rref(m);
    std::vector<char> is_pivot(a.cols(), 0);
    for (size_t c : pivots) is_pivot[c] = 1;
    size_t free_count = a.cols() - pivots.size();
    Matrix k(a.cols(), free_count, a.ring());
    size_t col = 0;
    for (size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        k.at(f, col) = 1;
        for (size_t r = 0; r < pivots.size(); ++r) {
            uint32_t v = m.at(r, f);
            if (v) k.at(pivots[r], col) = m.p - v;
        }
        ++col;
    }
    return k;
}

std::optional<std::vector<Int>> solve(const Matrix& a, const std::vector<Int>& b) {
    require(b.size() == a.rows(), "solve: rhs length mismatch");
    Mat m = from_matrix(a);
    // augment with b
    Mat aug;
    aug.rows = m.rows;
    aug.cols = m.cols + 1;
    aug.p = m.p;
    aug.e.resize(aug.rows * aug.cols);
    for (size_t i = 0; i < m.rows; ++i) {
        for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        Int x = b[i] % m.p;
        if (x < 0) x += m.p;
        aug.at(i, m.cols) = x.convert_to<uint32_t>();
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;  // 0 = 1 row
    std::vector<Int> x(a.cols(), 0);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, m.cols);
    // substitution check (kernels and bookkeeping both covered)
    auto ax = a.apply(x);
    for (size_t i = 0; i < ax.size(); ++i) {
        Int want = b[i] % m.p;
        if (want < 0) want += m.p;
        verify(ax[i] == want, "mod-p solve failed substitution check");
    }
    return x;
}

}  // namespace dlim::fp
