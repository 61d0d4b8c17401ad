#include "hopfkit/linalg.hpp"

namespace hopfkit {

namespace {

// Scale each row by the lcm of its denominators so that the Bareiss pass
// below stays in integers.  Row scaling is a legal row operation for every
// use here (rank, kernel, and solving with the augmented column attached).
void clear_denominators(Matrix& m) {
    if (!m.field().is_rationals()) return;
    for (int i = 0; i < m.rows(); ++i) {
        mpz_class l(1);
        for (int j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).denominator().get_mpz_t());
        if (l == 1) continue;
        Scalar s(m.field(), mpq_class(l, 1));
        for (int j = 0; j < m.cols(); ++j) m(i, j) *= s;
    }
}

// Fraction-free (Bareiss) forward elimination with column pivoting.
// Returns the pivot columns; on exit rows [0, rank) are in echelon form.
std::vector<int> forward_eliminate(Matrix& m) {
    clear_denominators(m);
    std::vector<int> pivots;
    Scalar prev = Scalar::one(m.field());
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        m.swap_rows(r, piv);
        const Scalar p = m(r, c);
        for (int i = r + 1; i < m.rows(); ++i) {
            const Scalar f = m(i, c);
            for (int j = c; j < m.cols(); ++j)
                m(i, j) = (p * m(i, j) - f * m(r, j)) / prev;
        }
        prev = p;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Echelon rref(Matrix a) {
    std::vector<int> pivots = forward_eliminate(a);
    // Normalize pivots to 1 and eliminate above them.
    for (int r = (int)pivots.size() - 1; r >= 0; --r) {
        int c = pivots[r];
        Scalar inv = a(r, c).inv();
        for (int j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (int i = 0; i < r; ++i) {
            Scalar f = a(i, c);
            if (f.is_zero()) continue;
            for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
    }
    return Echelon{std::move(a), std::move(pivots)};
}

int rank(const Matrix& a) {
    Matrix m = a;
    return (int)forward_eliminate(m).size();
}

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::logic_error("solve_linear: dimension mismatch");
    Echelon e = rref(a.hstack(b));
    // A pivot landing in the appended block certifies inconsistency.
    for (int c : e.pivot_cols)
        if (c >= a.cols()) return std::nullopt;
    Matrix x(a.field(), a.cols(), b.cols());
    for (int r = 0; r < e.rank(); ++r)
        for (int j = 0; j < b.cols(); ++j) x(e.pivot_cols[r], j) = e.mat(r, a.cols() + j);
    return x;
}

Matrix kernel_basis(const Matrix& a) {
    Echelon e = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(a.field(), a.cols(), (int)free_cols.size());
    for (size_t t = 0; t < free_cols.size(); ++t) {
        int f = free_cols[t];
        k(f, (int)t) = Scalar::one(a.field());
        for (int r = 0; r < e.rank(); ++r) k(e.pivot_cols[r], (int)t) = -e.mat(r, f);
    }
    return k;
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    auto x = solve_linear(a, Matrix::identity(a.field(), a.rows()));
    if (!x) return std::nullopt;
    if (!((a * *x) == Matrix::identity(a.field(), a.rows()))) return std::nullopt;
    return x;
}

bool in_column_space(const Matrix& basis, const Matrix& v) {
    return solve_linear(basis, v).has_value();
}

}  // namespace hopfkit
