#include "dlim/smith.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "dlim/fpmat.hpp"

namespace dlim {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

namespace {

// p*a + q*b = g = gcd(a,b) > 0, with small Bezout coefficients.
void gcdex(const Int& a, const Int& b, Int& g, Int& p, Int& q) {
    Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int quot = r0 / r1;
        Int tmp = r0 - quot * r1;
        r0 = r1;
        r1 = tmp;
        tmp = s0 - quot * s1;
        s0 = s1;
        s1 = tmp;
        tmp = t0 - quot * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (r0 < 0) {
        r0 = -r0;
        s0 = -s0;
        t0 = -t0;
    }
    g = r0;
    p = s0;
    q = t0;
}

// (row_r, row_i) <- (p*row_r + q*row_i, -(b/g)*row_r + (a/g)*row_i), the
// determinant-one transform that drops gcd(a,b) onto position (r, c).
void row_gcd_combine(Matrix& d, Matrix& u, size_t r, size_t i, const Int& a, const Int& b) {
    Int g, p, q;
    gcdex(a, b, g, p, q);
    Int aa = a / g, bb = b / g;
    for (Matrix* mp : {&d, &u}) {
        Matrix& m = *mp;
        for (size_t j = 0; j < m.cols(); ++j) {
            Int x = m.at(r, j), y = m.at(i, j);
            m.at(r, j) = p * x + q * y;
            m.at(i, j) = aa * y - bb * x;
        }
    }
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a < 0) != (b < 0) && q * b != a) q -= 1;
    return q;
}

// Round-to-nearest quotient; remainders at most half the divisor.
Int near_quot(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (2 * abs(r) > abs(b)) q += (a < 0) == (b < 0) ? 1 : -1;
    return q;
}

// One row-HNF sweep in place, tracking u.  Column segments are collapsed by
// Euclid sweeps with rounded quotients (the quotients along a remainder
// chain telescope, so transform entries stay determinant-sized, unlike
// single-shot Bezout combines whose coefficients compound); entries above
// each pivot are then reduced into [0, pivot).
bool hnf_row_pass(Matrix& d, Matrix& u) {
    const size_t m = d.rows(), n = d.cols();
    size_t r = 0;
    bool changed = false;
    for (size_t c = 0; c < n && r < m; ++c) {
        for (;;) {
            size_t best = m;
            for (size_t i = r; i < m; ++i) {
                if (d.at(i, c) == 0) continue;
                if (best == m || abs(d.at(i, c)) < abs(d.at(best, c))) best = i;
            }
            if (best == m) break;
            if (best != r) {
                d.swap_rows(r, best);
                u.swap_rows(r, best);
                changed = true;
            }
            bool more = false;
            for (size_t i = r + 1; i < m; ++i) {
                const Int& b = d.at(i, c);
                if (b == 0) continue;
                Int q = near_quot(b, d.at(r, c));
                d.add_row(i, r, -q);
                u.add_row(i, r, -q);
                changed = true;
                if (d.at(i, c) != 0) more = true;
            }
            if (!more) break;
        }
        if (d.at(r, c) == 0) continue;
        if (d.at(r, c) < 0) {
            d.scale_row(r, -1);
            u.scale_row(r, -1);
            changed = true;
        }
        for (size_t i = 0; i < r; ++i) {
            Int q = floor_div(d.at(i, c), d.at(r, c));
            if (q != 0) {
                d.add_row(i, r, -q);
                u.add_row(i, r, -q);
                changed = true;
            }
        }
        ++r;
    }
    return changed;
}

bool is_diagonal(const Matrix& d) {
    for (size_t i = 0; i < d.rows(); ++i)
        for (size_t j = 0; j < d.cols(); ++j)
            if (i != j && d.at(i, j) != 0) return false;
    return true;
}

}  // namespace

SmithForm smith_normal_form(const Matrix& a) {
    require(!a.ring().is_field(), "Smith form is an integer-matrix operation");
    const size_t m = a.rows(), n = a.cols();
    Matrix d = a;
    Matrix u = Matrix::identity(m);
    Matrix v = Matrix::identity(n);

    // Alternate row and column HNF sweeps until diagonal.  Each sweep that
    // changes anything strictly refines the pivot gcds, so the alternation
    // settles quickly; the cap is a safety net for the reconstruction check.
    // Column sweeps run as row sweeps on the transpose; the accumulated left
    // transform of that side transposes into the right factor v.
    Matrix vt = Matrix::identity(n);
    for (size_t round = 0;; ++round) {
        verify(round < 10000, "Smith alternation failed to settle");
        bool ch1 = hnf_row_pass(d, u);
        Matrix dt = d.transpose();
        bool ch2 = hnf_row_pass(dt, vt);
        d = dt.transpose();
        if (is_diagonal(d)) break;
        verify(ch1 || ch2, "Smith alternation stalled off-diagonal");
    }
    v = vt.transpose();

    const size_t steps = std::min(m, n);
    // zeros last, then enforce the divisibility chain with local 2x2 work
    for (;;) {
        bool moved = false;
        for (size_t i = 0; i + 1 < steps; ++i)
            if (d.at(i, i) == 0 && d.at(i + 1, i + 1) != 0) {
                d.swap_rows(i, i + 1);
                u.swap_rows(i, i + 1);
                d.swap_cols(i, i + 1);
                v.swap_cols(i, i + 1);
                moved = true;
            }
        if (!moved) break;
    }
    for (;;) {
        bool fixed = true;
        for (size_t i = 0; i + 1 < steps && fixed; ++i)
            for (size_t j = i + 1; j < steps && fixed; ++j) {
                const Int& a_ = d.at(i, i);
                const Int& b_ = d.at(j, j);
                if (a_ == 0 || b_ == 0 || b_ % a_ == 0) continue;
                // fold d_j into column i, then re-diagonalize the 2x2 block
                d.add_col(i, j, 1);
                v.add_col(i, j, 1);
                row_gcd_combine(d, u, i, j, d.at(i, i), d.at(j, i));
                // clear the fill-in at (i, j) now that d_ii = gcd divides it
                Int q = -(d.at(i, j) / d.at(i, i));
                d.add_col(j, i, q);
                v.add_col(j, i, q);
                if (d.at(j, j) < 0) {
                    d.scale_row(j, -1);
                    u.scale_row(j, -1);
                }
                fixed = false;
            }
        if (fixed) break;
    }

    SmithForm s;
    s.rows = m;
    s.cols = n;
    s.u = std::move(u);
    s.v = std::move(v);
    s.d.resize(steps, 0);
    for (size_t i = 0; i < steps; ++i) s.d[i] = d.at(i, i);

    // reconstruction and divisibility checks
    Matrix check = s.u.mul(a).mul(s.v);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) {
            Int expect = (i == j && i < steps) ? s.d[i] : Int(0);
            verify(check.at(i, j) == expect, "Smith reconstruction u*a*v != diag(d)");
        }
    for (size_t i = 0; i + 1 < steps; ++i) {
        if (s.d[i + 1] == 0) continue;
        verify(s.d[i] != 0 && s.d[i + 1] % s.d[i] == 0, "Smith divisibility chain broken");
    }
    return s;
}

std::optional<std::vector<Int>> solve_integer_system(const Matrix& a, const std::vector<Int>& b) {
    require(b.size() == a.rows(), "solve: rhs length " + std::to_string(b.size()) +
                                      " does not match " + std::to_string(a.rows()) + " rows");
    if (a.ring().is_field()) return solve_mod_p(a, b);
    SmithForm s = smith_normal_form(a);
    std::vector<Int> c = s.u.apply(b);
    std::vector<Int> y(a.cols(), 0);
    for (size_t i = 0; i < a.rows(); ++i) {
        Int di = i < s.d.size() ? s.d[i] : Int(0);
        if (di == 0) {
            if (c[i] != 0) return std::nullopt;
        } else {
            if (c[i] % di != 0) return std::nullopt;
            y[i] = c[i] / di;
        }
    }
    std::vector<Int> x = s.v.apply(y);
    // soundness: every returned solution verifies by substitution
    verify(a.apply(x) == b, "integer solve failed substitution check");
    return x;
}

Matrix kernel_basis(const Matrix& a) {
    if (a.ring().is_field()) return fp::kernel(a);
    SmithForm s = smith_normal_form(a);
    size_t r = s.rank();
    Matrix k(a.cols(), a.cols() - r);
    for (size_t j = r; j < a.cols(); ++j)
        for (size_t i = 0; i < a.cols(); ++i) k.at(i, j - r) = s.v.at(i, j);
    return k;
}

FinAbGroup cokernel(const Matrix& a) {
    if (a.ring().is_field()) {
        size_t rk = fp::rank(a);
        return FinAbGroup::free(a.rows() - rk);
    }
    SmithForm s = smith_normal_form(a);
    std::vector<Int> orders(s.d.begin(), s.d.end());
    size_t extra = a.rows() > s.d.size() ? a.rows() - s.d.size() : 0;
    return normalize_cyclic_factors(extra, std::move(orders));
}

MapGroups group_from_map(const Matrix& a) { return MapGroups{kernel_basis(a), cokernel(a)}; }

size_t rank_rational(const Matrix& a) {
    if (a.ring().is_field()) return fp::rank(a);
    Matrix m = a;
    size_t rows = m.rows(), cols = m.cols();
    size_t rank = 0;
    Int prev = 1;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && m.at(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        m.swap_rows(rank, piv);
        for (size_t i = rank + 1; i < rows; ++i) {
            for (size_t j = col + 1; j < cols; ++j) {
                Int t = m.at(i, j) * m.at(rank, col) - m.at(i, col) * m.at(rank, j);
                verify(t % prev == 0, "Bareiss exact-division failure");
                m.at(i, j) = t / prev;
            }
            m.at(i, col) = 0;
        }
        prev = m.at(rank, col);
        ++rank;
    }
    return rank;
}

Int determinant(const Matrix& a) {
    require(a.rows() == a.cols(), "determinant needs a square matrix");
    size_t n = a.rows();
    if (n == 0) return 1;
    Matrix m = a;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            size_t piv = k + 1;
            while (piv < n && m.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                verify(t % prev == 0, "Bareiss exact-division failure");
                m.at(i, j) = t / prev;
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

std::optional<std::vector<Int>> solve_mod_p(const Matrix& a, const std::vector<Int>& b) {
    require(a.ring().is_field(), "solve_mod_p needs field coefficients");
    return fp::solve(a, b);
}

}  // namespace dlim
