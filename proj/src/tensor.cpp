#include "hopfkit/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfkit {

Tensor::Tensor(FieldSpec f, std::vector<int> shape) : field_(f), shape_(std::move(shape)) {
    size_t n = 1;
    strides_.assign(shape_.size(), 1);
    for (int i = (int)shape_.size() - 1; i >= 0; --i) {
        if (shape_[i] < 0) throw std::invalid_argument("Tensor: negative dimension");
        strides_[i] = n;
        n *= (size_t)shape_[i];
    }
    data_.assign(n, Scalar(f));
}

size_t Tensor::flat_index(const std::vector<int>& idx) const {
    if (idx.size() != shape_.size()) throw std::logic_error("Tensor: index order mismatch");
    size_t f = 0;
    for (size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 0 || idx[i] >= shape_[i]) throw std::out_of_range("Tensor: index out of range");
        f += strides_[i] * (size_t)idx[i];
    }
    return f;
}

std::vector<int> Tensor::unflatten(size_t flat) const {
    std::vector<int> idx(shape_.size());
    for (size_t i = 0; i < shape_.size(); ++i) {
        idx[i] = shape_[i] ? (int)(flat / strides_[i] % (size_t)shape_[i]) : 0;
    }
    return idx;
}

bool Tensor::operator==(const Tensor& o) const {
    return field_ == o.field_ && shape_ == o.shape_ && data_ == o.data_;
}

void Tensor::for_nonzero(const std::function<void(const std::vector<int>&, const Scalar&)>& fn) const {
    for (size_t i = 0; i < data_.size(); ++i)
        if (!data_[i].is_zero()) fn(unflatten(i), data_[i]);
}

void Tensor::for_nonzero_slice(
    int first, const std::function<void(const std::vector<int>&, const Scalar&)>& fn) const {
    if (order() < 1) throw std::logic_error("Tensor::for_nonzero_slice: order-0 tensor");
    if (first < 0 || first >= shape_[0]) throw std::out_of_range("Tensor::for_nonzero_slice");
    const size_t block = strides_[0];
    const size_t base = block * (size_t)first;
    for (size_t off = 0; off < block; ++off)
        if (!data_[base + off].is_zero()) fn(unflatten(base + off), data_[base + off]);
}

Tensor Tensor::outer(const Tensor& a, const Tensor& b) {
    if (!(a.field() == b.field())) throw std::logic_error("Tensor::outer: field mismatch");
    std::vector<int> shape = a.shape_;
    shape.insert(shape.end(), b.shape_.begin(), b.shape_.end());
    Tensor r(a.field_, shape);
    for (size_t i = 0; i < a.data_.size(); ++i) {
        if (a.data_[i].is_zero()) continue;
        for (size_t j = 0; j < b.data_.size(); ++j) {
            if (b.data_[j].is_zero()) continue;
            r.data_[i * b.data_.size() + j] = a.data_[i] * b.data_[j];
        }
    }
    return r;
}

Tensor Tensor::contract(const std::vector<std::pair<int, int>>& pairs) const {
    std::vector<bool> contracted(shape_.size(), false);
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= order() || b >= order() || a == b)
            throw std::invalid_argument("Tensor::contract: bad leg pair");
        if (contracted[a] || contracted[b])
            throw std::invalid_argument("Tensor::contract: leg contracted twice");
        if (shape_[a] != shape_[b])
            throw std::invalid_argument("Tensor::contract: dimension mismatch");
        contracted[a] = contracted[b] = true;
    }
    std::vector<int> out_legs, out_shape;
    for (int i = 0; i < order(); ++i)
        if (!contracted[i]) {
            out_legs.push_back(i);
            out_shape.push_back(shape_[i]);
        }
    Tensor r(field_, out_shape);
    std::vector<int> out_idx(out_legs.size());
    for (size_t f = 0; f < data_.size(); ++f) {
        if (data_[f].is_zero()) continue;
        std::vector<int> idx = unflatten(f);
        bool diag = true;
        for (auto [a, b] : pairs)
            if (idx[a] != idx[b]) {
                diag = false;
                break;
            }
        if (!diag) continue;
        for (size_t t = 0; t < out_legs.size(); ++t) out_idx[t] = idx[out_legs[t]];
        r.at(out_idx) += data_[f];
    }
    return r;
}

Matrix Tensor::as_matrix(int split) const {
    if (split < 0 || split > order()) throw std::invalid_argument("Tensor::as_matrix: bad split");
    size_t rows = 1, cols = 1;
    for (int i = 0; i < split; ++i) rows *= (size_t)shape_[i];
    for (int i = split; i < order(); ++i) cols *= (size_t)shape_[i];
    Matrix m(field_, (int)rows, (int)cols);
    for (size_t f = 0; f < data_.size(); ++f) m((int)(f / cols), (int)(f % cols)) = data_[f];
    return m;
}

Tensor Tensor::from_matrix(const Matrix& m, std::vector<int> row_shape, std::vector<int> col_shape) {
    size_t rows = 1, cols = 1;
    for (int d : row_shape) rows *= (size_t)d;
    for (int d : col_shape) cols *= (size_t)d;
    if ((int)rows != m.rows() || (int)cols != m.cols())
        throw std::invalid_argument("Tensor::from_matrix: shape mismatch");
    std::vector<int> shape = row_shape;
    shape.insert(shape.end(), col_shape.begin(), col_shape.end());
    Tensor t(m.field(), shape);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) t.data_[(size_t)i * cols + j] = m(i, j);
    return t;
}

}  // namespace hopfkit
