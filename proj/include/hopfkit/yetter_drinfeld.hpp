#ifndef HOPFKIT_YETTER_DRINFELD_HPP
#define HOPFKIT_YETTER_DRINFELD_HPP

#include "hopfkit/doi_koppinen.hpp"

namespace hopfkit {

/// Right A-module and left H-comodule over an H-bicomodule algebra with
/// rho(ma) = sum S^{-1}(a(1)) m(-1) a(-1) (x) m(0) a(0).
struct YDModule {
    RightModule mod;     // over A
    LeftComodule comod;  // over the coalgebra of H
    int dim() const { return mod.dim; }
};

struct QuantumIntegral {
    Tensor gamma;  // (hdim, hdim, adim)
    bool total = false;
    int solution_space_dim = 0;
};

/// The quantum coinvariants B = { a : rho~(a) = 1 (x) a } with its inclusion
/// into A and its own structure constants.
struct Coinvariants {
    Matrix basis;     // a_dim x b_dim, columns span B inside A
    Algebra algebra;  // B as an algebra in the chosen basis
    int dim() const { return basis.cols(); }
};

/// N (x)_B A realized as an explicit quotient of N (x) A with a computed
/// basis: projection * section = Id, ker(projection) = relation span.
struct InducedModule {
    int n_dim = 0;
    Matrix projection;  // q x (n*a)
    Matrix section;     // (n*a) x q
    YDModule module;    // the induced structures on the quotient
    Report well_defined;
    int dim() const { return module.dim(); }
};

namespace yd {

/// H (x) H^op: componentwise coalgebra, (h⊗k)(h'⊗k') = hh' ⊗ k'k,
/// antipode S ⊗ S^{-1}.
HopfAlgebra tensor_with_op(const HopfAlgebra& h);

Report check_module(const BicomoduleAlgebra& ha, const YDModule& m);

/// The Verma structure (A, mult, rho~) with rho~(a) = sum S^{-1}(a(1)) a(-1) ⊗ a(0).
YDModule verma(const BicomoduleAlgebra& ha);
Matrix verma_coaction_matrix(const BicomoduleAlgebra& ha);  // (h*a) x a

/// H (x) A with (h⊗b)a = sum S^{-1}(a(1)) h a(-1) ⊗ b a(0) and rho = Delta ⊗ Id.
YDModule h_tensor_a(const BicomoduleAlgebra& ha);

/// The Doi-Koppinen datum (H ⊗ H^op, A, H) presenting the same category.
DKDatum embed_as_dk(const BicomoduleAlgebra& ha);
DKModule transport(const DKDatum& embedded, const YDModule& m);

Report morphism_check(const BicomoduleAlgebra& ha, const YDModule& source, const YDModule& target,
                      const Matrix& f, const std::string& id_prefix = "morphism");

/// Direct substitution of
///   sum g1 ⊗ gamma(g2)(h) = sum S^{-1}(x(1)) h2 x(-1) ⊗ x(0),  x = gamma(g)(h1),
/// at every basis pair, plus the normalization sum gamma(h1)(h2) = eps(h) 1_A.
Report verify_quantum_integral(const BicomoduleAlgebra& ha, const Tensor& gamma);

/// Solves through the Doi-Koppinen embedding, then re-verifies with the
/// direct substitution above.
std::optional<QuantumIntegral> solve_quantum_integral(const BicomoduleAlgebra& ha, bool require_total);

/// phi(g) = gamma(g)(1_H); left H-colinear for the Verma coaction.
Matrix phi_from_gamma(const BicomoduleAlgebra& ha, const Tensor& gamma);
Report check_phi_colinear(const BicomoduleAlgebra& ha, const Matrix& phi);
/// The stronger two-sided condition
///   sum x g1 ⊗ phi(g2) = sum S^{-1}(phi(g)(1)) x phi(g)(-1) ⊗ phi(g)(0).
Report check_strong_phi(const BicomoduleAlgebra& ha, const Matrix& phi);
/// gamma(g)(h) = phi(S^{-1}(h) g); nullopt iff the strong condition fails.
std::optional<QuantumIntegral> gamma_from_strong_phi(const BicomoduleAlgebra& ha, const Matrix& phi);

/// lambda(h⊗a) = sum a(0) gamma(h)(S^{-1}(a(1)) a(-1)), the H-colinear
/// retraction of rho~.
Matrix colinear_retraction(const BicomoduleAlgebra& ha, const Tensor& gamma);
/// Lambda(h⊗a) = sum lambda(S^{-2}(a(1)) h S(a(-1)) ⊗ 1_A) a(0), a retraction
/// of rho~ that is also right A-linear and left H-colinear.
Matrix splitting_Lambda(const BicomoduleAlgebra& ha, const Tensor& gamma);
Report verify_Lambda(const BicomoduleAlgebra& ha, const Matrix& lambda_big);

/// t_l = lambda(1_H ⊗ -) and t_r = Lambda(1_H ⊗ -); both land in B,
/// t_l(ba) = b t_l(a), t_r(ab) = t_r(a) b for b in B, t(1) = 1.
std::pair<Matrix, Matrix> quantum_traces(const BicomoduleAlgebra& ha, const Tensor& gamma);
Report verify_traces(const BicomoduleAlgebra& ha, const Coinvariants& b, const Matrix& tl,
                     const Matrix& tr);

Coinvariants coinvariants(const BicomoduleAlgebra& ha);
/// M^co(H) = { m : rho(m) = 1 ⊗ m }, columns inside M.
Matrix module_coinvariants(const BicomoduleAlgebra& ha, const YDModule& m);

InducedModule induce(const BicomoduleAlgebra& ha, const Coinvariants& b, const RightModule& n);
/// eta_N : N -> N (x)_B A, n -> n ⊗ 1, in quotient coordinates.
Matrix eta(const BicomoduleAlgebra& ha, const InducedModule& ind);
/// theta_N(sum n_i ⊗ a_i) = sum n_i t_l(a_i) on quotient coordinates.
Matrix theta(const BicomoduleAlgebra& ha, const Coinvariants& b, const RightModule& n,
             const InducedModule& ind, const Matrix& tl);
/// theta eta = Id and eta theta = Id on the computed coinvariants of N ⊗_B A.
Report verify_eta_iso(const BicomoduleAlgebra& ha, const Coinvariants& b, const RightModule& n,
                      const Matrix& tl, const std::string& label);

/// beta_M : M^co(H) ⊗_B A -> M, m ⊗ a -> ma, with rank metadata.
struct BetaM {
    Matrix beta;
    InducedModule induced;
    int rank = 0;
    Report report;
};
BetaM counit_beta(const BicomoduleAlgebra& ha, const Coinvariants& b, const YDModule& m,
                  const std::string& label);

/// The canonical map beta : A ⊗_B A -> H ⊗ A,
/// beta(a ⊗ b) = sum S^{-1}(b(1)) b(-1) ⊗ a b(0).
struct CanonicalBeta {
    Matrix beta;
    InducedModule induced;  // A ⊗_B A
    int rank = 0, source_dim = 0, target_dim = 0;
    bool surjective = false, injective = false, bijective = false;
    Report report;
};
CanonicalBeta canonical_beta(const BicomoduleAlgebra& ha);
Report is_quantum_galois(const BicomoduleAlgebra& ha);

/// Instance-level affineness verification: beta surjective, beta_M bijective
/// for each witness module, eta_N bijective for each witness B-module.
Report affineness_check(const BicomoduleAlgebra& ha, const QuantumIntegral& gamma,
                        const std::vector<std::pair<std::string, YDModule>>& modules,
                        const std::vector<std::pair<std::string, RightModule>>& b_modules);

}  // namespace yd
}  // namespace hopfkit

#endif
