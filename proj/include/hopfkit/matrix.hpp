#ifndef HOPFKIT_MATRIX_HPP
#define HOPFKIT_MATRIX_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "hopfkit/field.hpp"

namespace hopfkit {

/// Dense exact matrix, row-major.  A linear map f : V -> W is stored with
/// f(e_j) = sum_i M(i,j) e_i, so maps compose by matrix multiplication and
/// column vectors are elements.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(FieldSpec f, int rows, int cols)
        : field_(f), rows_(rows), cols_(cols), data_((size_t)rows * cols, Scalar(f)) {}

    static Matrix identity(FieldSpec f, int n);
    static Matrix zero(FieldSpec f, int rows, int cols) { return Matrix(f, rows, cols); }
    static Matrix column(FieldSpec f, std::initializer_list<long> entries);
    static Matrix basis_vector(FieldSpec f, int dim, int i);
    /// Rows given as initializer lists of integer literals.
    static Matrix from_rows(FieldSpec f, std::initializer_list<std::initializer_list<long>> rows);

    const FieldSpec& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int i, int j) { return data_[(size_t)i * cols_ + j]; }
    const Scalar& at(int i, int j) const { return data_[(size_t)i * cols_ + j]; }
    Scalar& operator()(int i, int j) { return at(i, j); }
    const Scalar& operator()(int i, int j) const { return at(i, j); }

    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const Scalar& s) const;
    Matrix operator-() const;
    Matrix& operator+=(const Matrix& o) { return *this = *this + o; }
    Matrix& operator-=(const Matrix& o) { return *this = *this - o; }

    Matrix transpose() const;
    Matrix col(int j) const;
    Matrix row(int i) const;
    void set_col(int j, const Matrix& v);
    Matrix hstack(const Matrix& o) const;
    Matrix vstack(const Matrix& o) const;
    void swap_rows(int i, int j);

    /// Kronecker product; matches the row-major flattening of tensor legs
    /// (index (i1,i2) -> i1*rows2 + i2).
    static Matrix kron(const Matrix& a, const Matrix& b);

    std::string str() const;

  private:
    void require_same_shape(const Matrix& o) const;
    FieldSpec field_;
    int rows_, cols_;
    std::vector<Scalar> data_;
};

}  // namespace hopfkit

#endif
