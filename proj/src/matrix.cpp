#include "hopfkit/matrix.hpp"

#include <sstream>

namespace hopfkit {

Matrix Matrix::identity(FieldSpec f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::column(FieldSpec f, std::initializer_list<long> entries) {
    Matrix m(f, (int)entries.size(), 1);
    int i = 0;
    for (long e : entries) m.at(i++, 0) = Scalar(f, e);
    return m;
}

Matrix Matrix::basis_vector(FieldSpec f, int dim, int i) {
    Matrix m(f, dim, 1);
    m.at(i, 0) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(FieldSpec f, std::initializer_list<std::initializer_list<long>> rows) {
    int r = (int)rows.size();
    int c = r ? (int)rows.begin()->size() : 0;
    Matrix m(f, r, c);
    int i = 0;
    for (auto& row : rows) {
        if ((int)row.size() != c) throw std::invalid_argument("Matrix: ragged rows");
        int j = 0;
        for (long e : row) m.at(i, j++) = Scalar(f, e);
        ++i;
    }
    return m;
}

void Matrix::require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
        throw std::logic_error("Matrix: shape or field mismatch");
}

bool Matrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_)) return false;
    return data_ == o.data_;
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_same_shape(o);
    Matrix r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_same_shape(o);
    Matrix r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& s : r.data_) s = -s;
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_ || !(field_ == o.field_))
        throw std::logic_error("Matrix: incompatible product " + std::to_string(rows_) + "x" +
                               std::to_string(cols_) + " * " + std::to_string(o.rows_) + "x" +
                               std::to_string(o.cols_));
    Matrix r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

Matrix Matrix::operator*(const Scalar& s) const {
    Matrix r = *this;
    for (auto& e : r.data_) e *= s;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::col(int j) const {
    Matrix r(field_, rows_, 1);
    for (int i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
    return r;
}

Matrix Matrix::row(int i) const {
    Matrix r(field_, 1, cols_);
    for (int j = 0; j < cols_; ++j) r.at(0, j) = at(i, j);
    return r;
}

void Matrix::set_col(int j, const Matrix& v) {
    if (v.rows() != rows_ || v.cols() != 1) throw std::logic_error("Matrix::set_col: bad column");
    for (int i = 0; i < rows_; ++i) at(i, j) = v.at(i, 0);
}

Matrix Matrix::hstack(const Matrix& o) const {
    if (rows_ != o.rows_) throw std::logic_error("Matrix::hstack: row mismatch");
    Matrix r(field_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (cols_ != o.cols_) throw std::logic_error("Matrix::vstack: col mismatch");
    Matrix r(field_, rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

void Matrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const Scalar& s = a.at(i, j);
            if (s.is_zero()) continue;
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q) {
                    if (b.at(p, q).is_zero()) continue;
                    r.at(i * b.rows() + p, j * b.cols() + q) = s * b.at(p, q);
                }
        }
    return r;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ") << "[";
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).str();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    if (rows_ == 0) os << "[]";
    return os.str();
}

}  // namespace hopfkit
