#ifndef HOPFKIT_TENSOR_HPP
#define HOPFKIT_TENSOR_HPP

#include <functional>
#include <utility>
#include <vector>

#include "hopfkit/matrix.hpp"

namespace hopfkit {

/// Dense exact tensor of arbitrary order.
///
/// Multi-index convention (fixed project-wide): entries are stored row-major,
/// last leg fastest, so the flat index of (i_1,...,i_r) over shape
/// (d_1,...,d_r) is ((i_1*d_2 + i_2)*d_3 + ...).  Composite spaces such as
/// C (x) M use the same flattening: basis vector (i_C, i_M) sits at
/// i_C * dim(M) + i_M.
///
/// Structure-constant conventions:
///   multiplication  (d,d,d)   e_i * e_j     = sum_k  t[i,j,k]  e_k
///   comultiplication(d,d,d)   Delta(e_i)    = sum_jk t[i,j,k]  e_j (x) e_k
///   right action    (m,a,m)   e_i . e_j     = sum_k  t[i,j,k]  e_k
///   left coaction   (m,c,m)   rho(e_i)      = sum_jk t[i,j,k]  e_j (x) e_k
///   right coaction  (a,a,h)   rho(e_i)      = sum_jk t[i,j,k]  e_j (x) e_k
class Tensor {
  public:
    Tensor() = default;
    Tensor(FieldSpec f, std::vector<int> shape);

    const FieldSpec& field() const { return field_; }
    const std::vector<int>& shape() const { return shape_; }
    int order() const { return (int)shape_.size(); }
    size_t size() const { return data_.size(); }

    size_t flat_index(const std::vector<int>& idx) const;
    std::vector<int> unflatten(size_t flat) const;

    Scalar& at(const std::vector<int>& idx) { return data_[flat_index(idx)]; }
    const Scalar& at(const std::vector<int>& idx) const { return data_[flat_index(idx)]; }
    Scalar& flat(size_t i) { return data_[i]; }
    const Scalar& flat(size_t i) const { return data_[i]; }

    bool operator==(const Tensor& o) const;
    bool operator!=(const Tensor& o) const { return !(*this == o); }

    void for_nonzero(const std::function<void(const std::vector<int>&, const Scalar&)>& fn) const;

    /// Nonzeros with the given first index only.  Entries sharing the first
    /// index form one contiguous block, so this costs a single block scan.
    void for_nonzero_slice(int first,
                           const std::function<void(const std::vector<int>&, const Scalar&)>& fn) const;

    /// Tensor product: legs of `a` followed by legs of `b`.
    static Tensor outer(const Tensor& a, const Tensor& b);

    /// Contract the given pairs of legs (sum over equal indices).  Remaining
    /// legs keep their declared order.  Paired dimensions must match.
    Tensor contract(const std::vector<std::pair<int, int>>& pairs) const;

    /// View an order-2 tensor as a matrix, or generally split legs
    /// [0,split) as rows and [split,order) as columns.
    Matrix as_matrix(int split) const;
    static Tensor from_matrix(const Matrix& m, std::vector<int> row_shape, std::vector<int> col_shape);

  private:
    FieldSpec field_;
    std::vector<int> shape_;
    std::vector<size_t> strides_;
    std::vector<Scalar> data_;
};

}  // namespace hopfkit

#endif
