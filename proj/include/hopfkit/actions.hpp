#ifndef HOPFKIT_ACTIONS_HPP
#define HOPFKIT_ACTIONS_HPP

#include "hopfkit/structures.hpp"

namespace hopfkit {

/// Right module over an algebra: e_i . e_j = sum_k action[i,j,k] e_k.
struct RightModule {
    Algebra over;
    int dim = 0;
    std::vector<std::string> basis;
    Tensor action;  // (dim, over.dim, dim)

    Matrix act(const Matrix& m, const Matrix& a) const;
    Matrix basis_vec(int i) const { return Matrix::basis_vector(over.field, dim, i); }
};

/// Left comodule over a coalgebra: rho(e_i) = sum_{j,k} coaction[i,j,k] e_j (x) e_k.
struct LeftComodule {
    Coalgebra over;
    int dim = 0;
    std::vector<std::string> basis;
    Tensor coaction;  // (dim, over.dim, dim)

    Matrix coact(const Matrix& m) const;    // (c*m) x 1
    Matrix coaction_matrix() const;         // (c*m) x m
    Matrix basis_vec(int i) const { return Matrix::basis_vector(over.field, dim, i); }
};

/// Algebra A with a left H-coaction that is an algebra map.
struct LeftComoduleAlgebra {
    HopfAlgebra over;
    Algebra alg;
    Tensor coaction;  // (a_dim, h_dim, a_dim)

    LeftComodule comodule() const;
};

/// Coalgebra C with a right H-action compatible with Delta and eps.
struct RightModuleCoalgebra {
    HopfAlgebra over;
    Coalgebra coa;
    Tensor action;  // (c_dim, h_dim, c_dim)

    Matrix act(const Matrix& c, const Matrix& h) const;
    RightModule module() const;  // over the underlying algebra of H
};

/// Algebra with commuting left and right H-coactions, both comodule-algebra
/// structures; carries a_(-1), a_(0), a_(1).
struct BicomoduleAlgebra {
    HopfAlgebra over;
    Algebra alg;
    Tensor left_coaction;   // (a_dim, h_dim, a_dim)
    Tensor right_coaction;  // (a_dim, a_dim, h_dim)

    /// The combined coaction a -> sum a_(-1) (x) a_(0) (x) a_(1) as a dense
    /// (h, a, h) block per input basis element.
    Tensor bicoaction_of(int i) const;
};

// ---- checkers --------------------------------------------------------------

Report check_right_module(const RightModule& m);
Report check_left_comodule(const LeftComodule& m);
Report check_comodule_algebra(const LeftComoduleAlgebra& a);
Report check_module_coalgebra(const RightModuleCoalgebra& c);
Report check_bicomodule_algebra(const BicomoduleAlgebra& a);

// ---- constructions ----------------------------------------------------------

/// A left C-comodule becomes a right C^*-module via m . c* = <c*, m_(-1)> m_(0).
RightModule csstar_module(const LeftComodule& m);

/// Trivial coactions/actions over H.
Tensor trivial_left_coaction(const HopfAlgebra& h, int dim);
Tensor trivial_right_coaction(const HopfAlgebra& h, int dim);
Tensor trivial_action(const HopfAlgebra& h, int dim);

BicomoduleAlgebra make_bicomodule_algebra(HopfAlgebra h, Algebra a, Tensor left_co, Tensor right_co);

}  // namespace hopfkit

#endif
