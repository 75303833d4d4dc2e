#include "alv/exact/algorithms.hpp"

#include <algorithm>
#include <optional>

namespace alv::exact {

/*
 * Bareiss fraction-free elimination. Intermediate entries stay integral
 * because each 2x2 "cross" determinant is exactly divisible by the
 * previous pivot. Row swaps flip the sign.
 */
Int det(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("det: matrix must be square");
    const std::size_t n = m.rows();
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t pivot = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a(i, k) != 0) { pivot = i; break; }
            if (pivot == k) return 0;
            a.swap_rows(k, pivot);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

namespace {

// Location of the entry of least nonzero absolute value in the trailing
// submatrix starting at (s, s); nullopt when that submatrix is zero.
std::optional<std::pair<std::size_t, std::size_t>> least_nonzero(const IntMatrix& d,
                                                                 std::size_t s) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_abs;
    for (std::size_t i = s; i < d.rows(); ++i)
        for (std::size_t j = s; j < d.cols(); ++j) {
            if (d(i, j) == 0) continue;
            Int a = abs(d(i, j));
            if (!best || a < best_abs) {
                best = {{i, j}};
                best_abs = a;
            }
        }
    return best;
}

bool cleared_cross(const IntMatrix& d, std::size_t s) {
    for (std::size_t i = s + 1; i < d.rows(); ++i)
        if (d(i, s) != 0) return false;
    for (std::size_t j = s + 1; j < d.cols(); ++j)
        if (d(s, j) != 0) return false;
    return true;
}

void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Int& factor) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += factor * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Int& factor) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += factor * m(i, src);
}

void negate_row(IntMatrix& m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    const std::size_t nmin = std::min(rows, cols);
    SmithResult r{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
    IntMatrix& d = r.d;

    for (std::size_t s = 0; s < nmin; ++s) {
        for (;;) {
            auto loc = least_nonzero(d, s);
            if (!loc) break;  // trailing block exhausted
            d.swap_rows(s, loc->first);
            r.u.swap_rows(s, loc->first);
            d.swap_cols(s, loc->second);
            r.v.swap_cols(s, loc->second);

            bool reduced = true;
            for (std::size_t i = s + 1; i < rows; ++i) {
                if (d(i, s) == 0) continue;
                Int q = d(i, s) / d(s, s);
                add_row(d, i, s, -q);
                add_row(r.u, i, s, -q);
                if (d(i, s) != 0) reduced = false;
            }
            for (std::size_t j = s + 1; j < cols; ++j) {
                if (d(s, j) == 0) continue;
                Int q = d(s, j) / d(s, s);
                add_col(d, j, s, -q);
                add_col(r.v, j, s, -q);
                if (d(s, j) != 0) reduced = false;
            }
            if (!reduced || !cleared_cross(d, s)) continue;

            // Pivot must divide the whole trailing block for the chain
            // d1 | d2 | ... ; fold a bad row in and restart the step.
            bool divides = true;
            for (std::size_t i = s + 1; i < rows && divides; ++i)
                for (std::size_t j = s + 1; j < cols; ++j)
                    if (d(i, j) % d(s, s) != 0) {
                        add_row(d, s, i, 1);
                        add_row(r.u, s, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (d(s, s) < 0) {
            negate_row(d, s);
            negate_row(r.u, s);
        }
    }
    return r;
}

std::vector<Int> invariant_factors(const IntMatrix& m) {
    SmithResult r = smith_normal_form(m);
    std::vector<Int> f;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) f.push_back(r.d(i, i));
    return f;
}

SolveResult solve_exact(const IntMatrix& m, const RatVector& rhs) {
    return solve_exact(to_rational(m), rhs);
}

SolveResult solve_exact(const RatMatrix& m, const RatVector& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("solve_exact: rhs size mismatch");
    const std::size_t rows = m.rows(), cols = m.cols();
    RatMatrix a(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) a(i, j) = m(i, j);
        a(i, cols) = rhs[i];
    }

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t p = row;
        while (p < rows && a(p, col) == 0) ++p;
        if (p == rows) continue;
        a.swap_rows(row, p);
        Rational inv = 1 / a(row, col);
        for (std::size_t j = col; j <= cols; ++j) a(row, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || a(i, col) == 0) continue;
            Rational f = a(i, col);
            for (std::size_t j = col; j <= cols; ++j) a(i, j) -= f * a(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }

    for (std::size_t i = row; i < rows; ++i)
        if (a(i, cols) != 0) return {SolveKind::inconsistent, {}};
    if (pivot_col.size() < cols) return {SolveKind::underdetermined, {}};

    RatVector x(cols, Rational(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = a(i, cols);
    return {SolveKind::unique, std::move(x)};
}

RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix must be square");
    const std::size_t n = m.rows();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a(p, col) == 0) ++p;
        if (p == n) throw std::domain_error("inverse: singular matrix");
        a.swap_rows(col, p);
        inv.swap_rows(col, p);
        Rational s = 1 / a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) *= s;
            inv(col, j) *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            Rational f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

IntMatrix row_basis(const IntMatrix& rows) {
    IntMatrix a = rows;
    const std::size_t m = a.rows(), n = a.cols();
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        // Euclidean reduction in this column below the current row block.
        for (;;) {
            std::size_t p = m;
            Int best;
            for (std::size_t i = r; i < m; ++i) {
                if (a(i, col) == 0) continue;
                Int mag = abs(a(i, col));
                if (p == m || mag < best) {
                    p = i;
                    best = mag;
                }
            }
            if (p == m) break;  // column clear below r
            a.swap_rows(r, p);
            bool clear = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (a(i, col) == 0) continue;
                Int q = a(i, col) / a(r, col);
                add_row(a, i, r, -q);
                if (a(i, col) != 0) clear = false;
            }
            if (clear) break;
        }
        if (a(r, col) != 0) {
            if (a(r, col) < 0) negate_row(a, r);
            // reduce rows above to put the column in Hermite form
            for (std::size_t i = 0; i < r; ++i) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, col).get_mpz_t(), a(r, col).get_mpz_t());
                if (q != 0) add_row(a, i, r, -q);
            }
            ++r;
        }
    }
    if (r == 0) throw std::domain_error("row_basis: zero matrix has no basis");
    IntMatrix basis(r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) basis(i, j) = a(i, j);
    return basis;
}

KernelResult integer_kernel(const IntMatrix& m) {
    SmithResult s = smith_normal_form(m);
    const std::size_t n = m.cols();
    const std::size_t nmin = std::min(m.rows(), n);
    std::vector<std::size_t> free_cols;
    for (std::size_t i = 0; i < n; ++i)
        if (i >= nmin || s.d(i, i) == 0) free_cols.push_back(i);
    if (free_cols.empty()) return {true, IntMatrix()};
    // m * (v e_i) = u^-1 d e_i = 0 exactly on the zero invariant factors;
    // columns of v at those indices are a primitive kernel basis.
    IntMatrix basis(free_cols.size(), n);
    for (std::size_t k = 0; k < free_cols.size(); ++k)
        for (std::size_t i = 0; i < n; ++i) basis(k, i) = s.v(i, free_cols[k]);
    return {false, basis};
}

Signature signature(const IntMatrix& symmetric) { return signature(to_rational(symmetric)); }

Signature signature(const RatMatrix& symmetric) {
    const std::size_t n = symmetric.rows();
    if (symmetric.cols() != n) throw std::invalid_argument("signature: matrix must be square");
    RatMatrix a = symmetric;
    Signature sig;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t pd = n, po = n;
            for (std::size_t j = k + 1; j < n; ++j) {
                if (pd == n && a(j, j) != 0) pd = j;
                if (po == n && a(k, j) != 0) po = j;
            }
            if (pd != n) {
                // symmetric swap of rows/cols k and pd
                for (std::size_t t = 0; t < n; ++t) std::swap(a(k, t), a(pd, t));
                for (std::size_t t = 0; t < n; ++t) std::swap(a(t, k), a(t, pd));
            } else if (po != n) {
                // fold row/col po into k; the new diagonal entry 2*a(k,po) != 0
                for (std::size_t t = 0; t < n; ++t) a(k, t) += a(po, t);
                for (std::size_t t = 0; t < n; ++t) a(t, k) += a(t, po);
            } else {
                ++sig.zero;
                continue;
            }
        }
        const Rational pivot = a(k, k);
        if (pivot > 0) ++sig.positive;
        else ++sig.negative;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rational f = a(i, k) / pivot;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
        for (std::size_t j = k + 1; j < n; ++j) a(k, j) = 0;
        // keep the matrix symmetric for the subsequent steps
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < i; ++j) a(j, i) = a(i, j);
    }
    return sig;
}

}  // namespace alv::exact
