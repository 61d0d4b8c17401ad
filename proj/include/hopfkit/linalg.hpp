#ifndef HOPFKIT_LINALG_HPP
#define HOPFKIT_LINALG_HPP

#include <optional>
#include <vector>

#include "hopfkit/matrix.hpp"

namespace hopfkit {

/// Reduced row echelon form with the pivot columns that were used.
struct Echelon {
    Matrix mat;
    std::vector<int> pivot_cols;
    int rank() const { return (int)pivot_cols.size(); }
};

/// Exact RREF.  Over Q the forward pass is fraction-free (rows are cleared
/// to integers, then one-step Bareiss elimination), which keeps intermediate
/// entries at minor-sized integers; the final normalization divides back.
Echelon rref(Matrix a);

int rank(const Matrix& a);

/// Some x with a*x = b (free variables set to zero), or nullopt iff the
/// system is inconsistent.  b may have several columns; all are solved
/// against the same a.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b);

/// Columns form a basis of {x : a*x = 0}; count = cols - rank.
Matrix kernel_basis(const Matrix& a);

std::optional<Matrix> inverse(const Matrix& a);

/// Does v lie in the column space of basis?
bool in_column_space(const Matrix& basis, const Matrix& v);

}  // namespace hopfkit

#endif
