#ifndef HOPFKIT_DOI_KOPPINEN_HPP
#define HOPFKIT_DOI_KOPPINEN_HPP

#include "hopfkit/actions.hpp"

namespace hopfkit {

/// A Doi-Koppinen datum (H, A, C): H a Hopf algebra, A a left H-comodule
/// algebra, C a right H-module coalgebra.
struct DKDatum {
    HopfAlgebra H;
    LeftComoduleAlgebra A;   // over H
    RightModuleCoalgebra C;  // over H

    const FieldSpec& field() const { return H.field(); }
    int hdim() const { return H.dim(); }
    int adim() const { return A.alg.dim; }
    int cdim() const { return C.coa.dim; }
};

/// Right A-module and left C-comodule on one space satisfying
/// rho(ma) = sum m(-1).a(-1) (x) m(0)a(0).
struct DKModule {
    RightModule mod;      // over A
    LeftComodule comod;   // over C
    int dim() const { return mod.dim; }
};

/// gamma : C -> Hom(C, A), gamma(e_i)(e_j) = sum_k tensor[i,j,k] e_k.
struct DKIntegral {
    Tensor gamma;  // (cdim, cdim, adim)
    bool total = false;
    int solution_space_dim = 0;
};

namespace dk {

Report check_datum(const DKDatum& d);
Report check_module(const DKDatum& d, const DKModule& m);

/// C (x) M for a right A-module M: (c⊗m)a = sum c.a(-1) ⊗ m a(0),
/// rho = Delta ⊗ Id.
DKModule induce(const DKDatum& d, const RightModule& m);
/// C (x) A with the induced structures (A acting on itself).
DKModule canonical_ca(const DKDatum& d);
/// The other C (x) A structure: (c⊗b)a = c⊗ba, rho(c⊗b) = sum c1.b(-1) ⊗ c2 ⊗ b(0).
DKModule alt_ca(const DKDatum& d);
/// M (x) V with structures coming from M alone.
DKModule extend_by_space(const DKDatum& d, const DKModule& m, int vdim);

/// u(c⊗a) = sum c.a(-1) ⊗ a(0), an isomorphism alt_ca -> canonical_ca with
/// inverse u_inv(c⊗a) = sum c.S(a(-1)) ⊗ a(0).
struct UIso {
    Matrix u, u_inv;
    DKModule source, target;
};
UIso u_iso(const DKDatum& d);

/// Is f (target.dim x source.dim) A-linear and C-colinear?
Report morphism_check(const DKDatum& d, const DKModule& source, const DKModule& target,
                      const Matrix& f, const std::string& id_prefix = "morphism");

/// The smash product A # C^* with
/// (a#c*)(b#d*) = sum a(0)b # c* * (a(-1).d*); basis order (a, c*).
Algebra smash_product(const DKDatum& d);
/// i(a#c*)(c) = <c*,c> a as a matrix from A⊗C* to Hom(C,A) (maps flattened
/// by (a_row, c_col)).
Matrix smash_to_hom(const DKDatum& d);

/// Koppinen's product on Hom(C, A):
/// (f.g)(c) = sum f(c1)(0) g(c2 . f(c1)(-1)); unit eta_A eps_C.
Matrix koppinen_product(const DKDatum& d, const Matrix& f, const Matrix& g);
Matrix koppinen_unit(const DKDatum& d);

/// Right C^*-action on Hom(C,A): (f.c*)(c) = sum f(c1)(0) <c*, c2.f(c1)(-1)>.
Matrix cstar_action_on_hom(const DKDatum& d, const Matrix& f, const Matrix& cstar);

/// The right C-coaction on C⊗A: rho_r(c⊗a) = sum c1 ⊗ a(0) ⊗ c2 S(a(-1)),
/// returned as a (cdim*adim*cdim) x (cdim*adim) matrix.
Matrix right_coaction_ca(const DKDatum& d);

/// Checks the integral law
///   sum c1 ⊗ gamma(c2)(d) = sum d2.{gamma(c)(d1)}(-1) ⊗ {gamma(c)(d1)}(0)
/// at every basis pair, and reports the normalization
///   sum gamma(c1)(c2) = eps(c) 1_A   separately.
Report verify_integral(const DKDatum& d, const Tensor& gamma);

/// Exact feasibility of the (linear, plus affine normalization) system.
std::optional<DKIntegral> solve_integral(const DKDatum& d, bool require_total);

/// phi(h) = gamma(h)(1_H) for a datum with C = H via multiplication.
Matrix phi_from_gamma(const DKDatum& d, const Tensor& gamma);
/// gamma(h)(g) = phi(S^{-1}(g) h).
Tensor gamma_from_phi(const DKDatum& d, const Matrix& phi);
/// Left H-colinearity of phi : H -> A (rho_A phi = (Id⊗phi) Delta) plus
/// the normalization phi(1) = 1.
Report verify_doi_integral(const DKDatum& d, const Matrix& phi);

/// u~(n) = sum u(n(0))(0) . gamma(n(-1))(u(n(0))(-1)) for u : N -> M.
Matrix deform_map(const DKDatum& d, const DKModule& m, const LeftComodule& n, const Matrix& u,
                  const Tensor& gamma);

/// lambda_M(c⊗m) = sum m(0) gamma(c)(m(-1)) : C⊗M -> M.
Matrix splitting_lambda(const DKDatum& d, const DKModule& m, const Tensor& gamma);
/// lambda is a retraction of rho_M and left C-colinear.
Report verify_splitting(const DKDatum& d, const DKModule& m, const Matrix& lambda);

/// f(c⊗a⊗m) = sum m(0) gamma(c S(a(-1)))(m(-1)) a(0) with C-colinear section
/// g(m) = sum m(-1) ⊗ 1_A ⊗ m(0).
struct GeneratorMaps {
    Matrix f, g;
    DKModule cam;  // C⊗A⊗M with its Doi-Koppinen structure
};
GeneratorMaps generator_epi(const DKDatum& d, const DKModule& m, const Tensor& gamma);
Report verify_generator(const DKDatum& d, const DKModule& m, const GeneratorMaps& gm);

/// The datum (k, k, C) with trivial H-action on C.
DKDatum trivial_datum(const Coalgebra& c);
/// Integral for a coalgebra: gamma : C -> C^* for the datum (k, k, C).
std::optional<DKIntegral> coalgebra_integral(const Coalgebra& c, bool require_total);

std::vector<std::string> tensor_basis_names(const std::vector<std::string>& a,
                                            const std::vector<std::string>& b);

}  // namespace dk
}  // namespace hopfkit

#endif
