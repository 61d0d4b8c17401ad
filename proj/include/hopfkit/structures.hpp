#ifndef HOPFKIT_STRUCTURES_HPP
#define HOPFKIT_STRUCTURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "hopfkit/report.hpp"
#include "hopfkit/tensor.hpp"

namespace hopfkit {

/// Finite-dimensional algebra by structure constants:
/// e_i * e_j = sum_k mult[i,j,k] e_k, with unit vector 1 = sum_i unit[i] e_i.
struct Algebra {
    FieldSpec field;
    int dim = 0;
    std::vector<std::string> basis;
    Tensor mult;  // (dim, dim, dim)
    Matrix unit;  // dim x 1

    Matrix mul(const Matrix& x, const Matrix& y) const;
    Matrix mult_matrix() const;  // dim x dim^2, column (i,j) = e_i * e_j
    Matrix basis_vec(int i) const { return Matrix::basis_vector(field, dim, i); }
};

/// Finite-dimensional coalgebra: Delta(e_i) = sum_{j,k} comult[i,j,k] e_j (x) e_k.
struct Coalgebra {
    FieldSpec field;
    int dim = 0;
    std::vector<std::string> basis;
    Tensor comult;  // (dim, dim, dim)
    Matrix counit;  // 1 x dim

    Matrix comult_vec(const Matrix& x) const;  // dim^2 x 1, flattened (j,k)
    Matrix comult_matrix() const;              // dim^2 x dim
    Scalar counit_of(const Matrix& x) const;
    Matrix basis_vec(int i) const { return Matrix::basis_vector(field, dim, i); }
};

/// Algebra and coalgebra on the same space with Delta and eps algebra maps.
struct Bialgebra {
    Algebra alg;
    Coalgebra coa;

    const FieldSpec& field() const { return alg.field; }
    int dim() const { return alg.dim; }
};

struct HopfAlgebra {
    Bialgebra bi;
    Matrix antipode;                         // dim x dim, column j = S(e_j)
    std::optional<Matrix> antipode_inverse;  // present once computed

    const FieldSpec& field() const { return bi.alg.field; }
    int dim() const { return bi.alg.dim; }
    const Algebra& alg() const { return bi.alg; }
    const Coalgebra& coa() const { return bi.coa; }
    Matrix s(const Matrix& x) const { return antipode * x; }
    Matrix s_inv(const Matrix& x) const;
};

// ---- axiom checkers ------------------------------------------------------

Report check_algebra(const Algebra& a);
Report check_coalgebra(const Coalgebra& c);
Report check_bialgebra(const Bialgebra& b);  // includes both component checks
Report check_hopf(const HopfAlgebra& h);     // includes the bialgebra checks

// ---- checked construction ------------------------------------------------

Algebra make_algebra(FieldSpec field, std::vector<std::string> basis, Tensor mult, Matrix unit);
Coalgebra make_coalgebra(FieldSpec field, std::vector<std::string> basis, Tensor comult, Matrix counit);
Bialgebra make_bialgebra(Algebra a, Coalgebra c);
/// Computes and stores the antipode inverse (always exists here: finite
/// dimension over a field).
HopfAlgebra make_hopf(Bialgebra b, Matrix antipode);
Bialgebra make_bialgebra_unchecked(Algebra a, Coalgebra c);
HopfAlgebra make_hopf_unchecked(Bialgebra b, Matrix antipode);

// ---- derived structures and operations -----------------------------------

/// The convolution algebra C^*: <f*g, c> = sum <f, c_(1)> <g, c_(2)>.
Algebra dual_algebra(const Coalgebra& c);

/// The convolution inverse of the identity as one linear system in dim^2
/// unknowns; unique when it exists.
std::optional<Matrix> solve_antipode(const Bialgebra& b);

std::optional<Matrix> antipode_inverse(const HopfAlgebra& h);

/// (f*g)(c) = sum f(c_(1)) g(c_(2)) for maps f, g : C -> A given as
/// a_dim x c_dim matrices.
Matrix convolution(const Coalgebra& c, const Algebra& a, const Matrix& f, const Matrix& g);
Matrix convolution_unit(const Coalgebra& c, const Algebra& a);  // eta_A . eps_C

/// c* -> c = sum <c*, c_(2)> c_(1)  and  c <- c* = sum <c*, c_(1)> c_(2).
/// Functionals are coefficient columns against the dual basis.
Matrix harpoon_left(const Coalgebra& c, const Matrix& cstar, const Matrix& cvec);
Matrix harpoon_right(const Coalgebra& c, const Matrix& cvec, const Matrix& cstar);

}  // namespace hopfkit

#endif
